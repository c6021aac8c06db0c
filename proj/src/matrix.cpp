#include "bratteli/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bratteli/errors.hpp"

namespace bratteli {

IntMatrix::IntMatrix(std::size_t d, std::vector<Int> entries) : d_(d), a_(std::move(entries)) {
    if (a_.size() != d * d)
        raise(ErrorKind::DimensionMismatch, "expected " + std::to_string(d * d) + " entries");
}

IntMatrix IntMatrix::identity(std::size_t d) {
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(std::size_t d) {
    IntMatrix m(d);
    for (auto& x : m.a_) x = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t d = rows.size();
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d)
            raise(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix m(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (d_ != rhs.d_) raise(ErrorKind::DimensionMismatch, "matrix product dimension mismatch");
    IntMatrix out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t k = 0; k < d_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < d_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (v.size() != d_) raise(ErrorKind::DimensionMismatch, "matrix-vector dimension mismatch");
    IntVec out(d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::pow(unsigned long long k) const {
    IntMatrix result = identity(d_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Int IntMatrix::norm1() const {
    Int s = 0;
    for (const auto& x : a_) s += boost::multiprecision::abs(x);
    return s;
}

Int IntMatrix::row_sum(std::size_t i) const {
    Int s = 0;
    for (std::size_t j = 0; j < d_; ++j) s += at(i, j);
    return s;
}

Int IntMatrix::min_entry() const {
    return *std::min_element(a_.begin(), a_.end());
}

Int IntMatrix::max_entry() const {
    return *std::max_element(a_.begin(), a_.end());
}

bool IntMatrix::is_nonnegative() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x >= 0; });
}

bool IntMatrix::is_positive() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x > 0; });
}

bool IntMatrix::has_zero_row() const {
    for (std::size_t i = 0; i < d_; ++i)
        if (row_sum(i) == 0) return true;
    return false;
}

std::size_t IntMatrix::max_entry_bits() const {
    std::size_t bits = 0;
    for (const auto& x : a_) bits = std::max(bits, bit_size(x));
    return bits;
}

std::vector<bool> IntMatrix::support() const {
    std::vector<bool> s(d_ * d_);
    for (std::size_t i = 0; i < a_.size(); ++i) s[i] = (a_[i] != 0);
    return s;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < d_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < d_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

LogMatrix::LogMatrix(const IntMatrix& m) : d_(m.dim()), a_(d_ * d_) {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) a_[i * d_ + j] = log_big(m.at(i, j));
}

LogMatrix LogMatrix::operator*(const LogMatrix& rhs) const {
    if (d_ != rhs.d_) raise(ErrorKind::DimensionMismatch, "log matrix product dimension mismatch");
    LogMatrix out;
    out.d_ = d_;
    out.a_.assign(d_ * d_, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
            // log-sum-exp over k of at(i,k) + rhs.at(k,j)
            double mx = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < d_; ++k)
                mx = std::max(mx, at(i, k) + rhs.at(k, j));
            if (std::isinf(mx)) continue;
            double acc = 0.0;
            for (std::size_t k = 0; k < d_; ++k) {
                const double t = at(i, k) + rhs.at(k, j);
                if (!std::isinf(t)) acc += std::exp(t - mx);
            }
            out.a_[i * d_ + j] = mx + std::log(acc);
        }
    }
    return out;
}

bool LogMatrix::is_positive() const {
    return std::all_of(a_.begin(), a_.end(), [](double x) { return !std::isinf(x); });
}

bool support_is_primitive(const std::vector<bool>& support, std::size_t d) {
    // Boolean matrix powers up to the Wielandt bound d^2 - 2d + 2.
    if (d == 0) return false;
    std::vector<bool> p = support;
    const std::size_t limit = d * d - 2 * d + 2;
    auto all_true = [&](const std::vector<bool>& m) {
        return std::all_of(m.begin(), m.end(), [](bool b) { return b; });
    };
    if (all_true(p)) return true;
    std::vector<bool> cur = support;
    for (std::size_t step = 1; step < limit; ++step) {
        std::vector<bool> next(d * d, false);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k)
                if (cur[i * d + k])
                    for (std::size_t j = 0; j < d; ++j)
                        if (support[k * d + j]) next[i * d + j] = true;
        cur.swap(next);
        if (all_true(cur)) return true;
    }
    return false;
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroRow: return "ZeroRow";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorKind::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
        case ErrorKind::TimeBudgetExceeded: return "TimeBudgetExceeded";
        case ErrorKind::UnboundedTail: return "UnboundedTail";
        case ErrorKind::SupportUnstable: return "SupportUnstable";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::NotTwoBlock: return "NotTwoBlock";
        case ErrorKind::ConnectorsUnbounded: return "ConnectorsUnbounded";
        case ErrorKind::SpecNotProper: return "SpecNotProper";
        case ErrorKind::ZeroRowInduced: return "ZeroRowInduced";
        case ErrorKind::BrokenPath: return "BrokenPath";
        case ErrorKind::MultipleMeasures: return "MultipleMeasures";
        case ErrorKind::DegenerateColumn: return "DegenerateColumn";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::OrderMultisetMismatch: return "OrderMultisetMismatch";
        case ErrorKind::CapTooSmall: return "CapTooSmall";
        case ErrorKind::BlockMissingSymbol: return "BlockMissingSymbol";
        case ErrorKind::BlockTooShort: return "BlockTooShort";
        case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace bratteli
