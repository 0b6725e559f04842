#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lfortho/family.hpp"
#include "lfortho/hankel.hpp"
#include "lfortho/precision.hpp"

namespace lfortho {

// Truncation of a semi-infinite matrix stored by diagonals. valid_rows /
// valid_cols bound the leading rows/columns whose stored entries coincide
// with the semi-infinite object; an entry (i,j) is trustworthy when
// i < valid_rows or j < valid_cols.
class BandedOperator {
public:
    int size = 0;
    int valid_rows = 0;
    int valid_cols = 0;
    std::map<int, std::vector<real>> diags;  // diags[d][i] = A(i, i+d)

    BandedOperator() = default;
    explicit BandedOperator(int n) : size(n), valid_rows(n), valid_cols(n) {}

    static BandedOperator identity(int n);
    static BandedOperator diagonal(std::vector<real> v);

    real entry(int i, int j) const;
    void set(int i, int j, const real& v);

    int upper() const;  // largest offset >= 0 with stored entries
    int lower() const;  // depth of the deepest subdiagonal (>= 0)

    bool exact(int i, int j) const { return i < valid_rows || j < valid_cols; }

    BandedOperator transpose() const;
    BandedOperator scaled(const real& c) const;
    BandedOperator& shift_diagonal(const real& c);  // A += cI

    real max_abs() const;  // over exact entries
};

BandedOperator operator*(const BandedOperator& A, const BandedOperator& B);
BandedOperator operator+(const BandedOperator& A, const BandedOperator& B);
BandedOperator operator-(const BandedOperator& A, const BandedOperator& B);

BandedOperator shift_matrix(int n);  // Lambda

BandedOperator jacobi_matrix(const SpectralData& data);

// full lower-triangular binomial matrix (sign=-1 gives the inverse)
BandedOperator pascal_matrix(int n, int sign);

BandedOperator dressed_pascal(const Pipeline& pipe, int sign);  // Pi = S B S^{-1}

// sigma(X) = eta prod(X + a_i I), theta(X) = X (X + b_1 I)(X + b_2 I)
BandedOperator sigma_of(const FamilySpec& spec, const BandedOperator& X);
BandedOperator theta_of(const FamilySpec& spec, const BandedOperator& X);

// Jacobi/Pascal data bundled once per pipeline.
struct Operators {
    BandedOperator J;
    BandedOperator Pi;
    BandedOperator PiInv;
    BandedOperator H;     // diag(H_n)
    BandedOperator Hinv;  // diag(1/H_n)
};

Operators make_operators(const Pipeline& pipe);

enum class PsiMethod {
    sigmaJ_H_PiT,       // sigma(J) H Pi^T
    PiInv_H_thetaJT,    // Pi^{-1} H theta(J^T)
    PiInv_thetaJ_H,     // Pi^{-1} theta(J) H
    H_sigmaJT_PiT,      // H sigma(J^T) Pi^T
    thetaJplus_PiInv_H, // theta(J+I) Pi^{-1} H
    H_PiT_sigmaJTminus, // H Pi^T sigma(J^T - I)
};

BandedOperator structure_matrix(const FamilySpec& spec, const Operators& ops, PsiMethod method);

// Same product expression with every factor replaced by its entrywise absolute
// value: an upper bound on the magnitudes accumulated inside the product, used
// as the backward-error denominator when comparing Psi expressions.
BandedOperator structure_condition(const FamilySpec& spec, const Operators& ops,
                                   PsiMethod method);

// pi^{[k]}_n, entry (n+|k|, n) of Pi (k>0) or Pi^{-1} (k<0)
real pi_diag(const BandedOperator& PiOrInv, int k, int n);

// residuals of theta(z) P(z-1) = Psi H^{-1} P(z) and sigma(z) P(z+1) = Psi^T H^{-1} P(z)
std::pair<real, real> shift_structure_residual(const FamilySpec& spec, const Pipeline& pipe,
                                               const Operators& ops, const BandedOperator& Psi,
                                               const BandedOperator& PsiCond, const real& z);

// || [Psi H^{-1}, J] - Psi H^{-1} ||_max / || Psi H^{-1} ||_max on exact entries
real compatibility_residual(const Operators& ops, const BandedOperator& Psi);

}  // namespace lfortho
