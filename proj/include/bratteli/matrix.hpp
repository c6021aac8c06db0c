#pragma once

#include <cstddef>
#include <vector>

#include "bratteli/bigint.hpp"

namespace bratteli {

/// Dense square matrix with arbitrary-precision integer entries.
/// Entry (i, j) counts edges from source vertex j into range vertex i,
/// so row i is the in-edge profile of vertex i one level up.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t d) : d_(d), a_(d * d) {}
    IntMatrix(std::size_t d, std::vector<Int> entries);

    static IntMatrix identity(std::size_t d);
    static IntMatrix ones(std::size_t d);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t dim() const { return d_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    const std::vector<Int>& entries() const { return a_; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec operator*(const IntVec& v) const;

    /// A^k by repeated squaring, k >= 0.
    IntMatrix pow(unsigned long long k) const;

    /// Entrywise 1-norm: sum of all entries (entries are nonnegative here).
    Int norm1() const;

    Int row_sum(std::size_t i) const;
    Int min_entry() const;
    Int max_entry() const;

    bool is_nonnegative() const;
    bool is_positive() const;
    bool has_zero_row() const;

    /// Largest entry bit size; the budget cap is checked against this.
    std::size_t max_entry_bits() const;

    /// Boolean support pattern, row-major, true where the entry is nonzero.
    std::vector<bool> support() const;

    std::string to_string() const;

private:
    std::size_t d_ = 0;
    std::vector<Int> a_;
};

/// Log-domain mirror of a nonnegative matrix: natural log of each entry,
/// -inf for zeros.  Used for depth scans past the exact bit-size cap; the
/// log-sum-exp accumulation keeps ~1e-12 relative accuracy at desk scale.
class LogMatrix {
public:
    LogMatrix() = default;
    explicit LogMatrix(const IntMatrix& m);

    std::size_t dim() const { return d_; }
    double at(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
    double& at(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }

    LogMatrix operator*(const LogMatrix& rhs) const;

    bool is_positive() const;

private:
    std::size_t d_ = 0;
    std::vector<double> a_;  // log entries
};

/// Support pattern as an adjacency structure on vertices; edge j -> i when
/// entry (i, j) is nonzero (mass flows from source j to range i).
struct SupportDigraph {
    std::size_t d = 0;
    std::vector<bool> adj;  // row-major, adj[i*d+j] = edge j -> i

    bool edge(std::size_t from, std::size_t to) const { return adj[to * d + from]; }
};

bool support_is_primitive(const std::vector<bool>& support, std::size_t d);

}  // namespace bratteli
