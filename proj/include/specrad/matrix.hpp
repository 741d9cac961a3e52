#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace specrad {

class SignPattern;

/// Dense n-by-n matrix with nonnegative real entries.  Immutable after
/// construction; negative entries are rejected at construction time.
class NonnegMatrix {
public:
    explicit NonnegMatrix(int n);
    NonnegMatrix(int n, std::vector<double> entries);
    static NonnegMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& entries() const { return entries_; }
    std::vector<std::vector<double>> to_rows() const;

    SignPattern pattern() const;

private:
    int n_;
    std::vector<double> entries_;
};

/// Boolean incidence structure of a square matrix: mask[i][j] is true
/// exactly when the entry is strictly positive.
class SignPattern {
public:
    explicit SignPattern(int n);
    SignPattern(int n, std::vector<char> mask);
    static SignPattern from_rows(const std::vector<std::vector<int>>& rows);
    static SignPattern from_bits(int n, std::uint64_t bits);  // row-major, n*n <= 64

    int dim() const { return n_; }
    bool operator()(int i, int j) const { return mask_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    int nnz() const;
    SignPattern transposed() const;
    bool is_symmetric() const;
    std::uint64_t to_bits() const;

    /// Unit-entry realization of the pattern.
    NonnegMatrix realize() const;

    bool operator==(const SignPattern&) const = default;

private:
    int n_;
    std::vector<char> mask_;
};

/// Diagonal of a real diagonal matrix D, the exponent parameters of e^D A.
class DiagonalParams {
public:
    explicit DiagonalParams(int n) : values_(n, 0.0) {}
    explicit DiagonalParams(std::vector<double> values) : values_(std::move(values)) {}

    int dim() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    /// True when all diagonal values coincide (D = c I) within tol.
    bool is_scalar(double tol = 0.0) const;

    bool operator==(const DiagonalParams&) const = default;

private:
    std::vector<double> values_;
};

struct PerronPair {
    double radius = 0.0;
    std::vector<double> vector;  // positive, normalized to unit sum
};

SignPattern sign_pattern(const NonnegMatrix& m);

/// result[i][j] = exp(D[i]) * M[i][j].  Sign pattern is preserved.
NonnegMatrix scale_exp(const NonnegMatrix& m, const DiagonalParams& d);

/// Elementwise (1-t) C + t D with t in [0, 1].
DiagonalParams convex_combination(const DiagonalParams& c, const DiagonalParams& d, double t);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

// Plain-text format: first line n, then n rows of n whitespace-separated
// nonnegative numbers.  JSON mirror: {"n":..., "entries":[[...],...]}.
NonnegMatrix read_matrix_text(std::istream& in);
NonnegMatrix parse_matrix(const std::string& content);  // dispatches on leading '{'
std::string write_matrix_text(const NonnegMatrix& m);

}  // namespace specrad
