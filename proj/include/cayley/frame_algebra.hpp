/**
 * @file frame_algebra.hpp
 * @brief Exact exterior calculus over the three-dimensional link coframe with
 *        Q(sqrt(3)) coefficients, and verification of the moving-frame second
 *        structure equations for the twisted-cubic link connection data.
 *
 * Forms are graded by degree 0..3 over the basis omega_I indexed by sorted
 * subsets of {1,2,3}; the exterior derivative on generators follows the
 * Maurer-Cartan rule  d omega_k(e_i, e_j) = -omega_k([e_i, e_j])  for the Lie
 * bracket table of the link, and extends by the graded Leibniz rule.
 */
#ifndef CAYLEY_FRAME_ALGEBRA_HPP
#define CAYLEY_FRAME_ALGEBRA_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cayley/qsqrt3.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Bracket table [e_i, e_j] = sum_k c^k_{ij} e_k over indices 1..3,
/// antisymmetric in (i, j).
class StructureConstants {
public:
    /// Constructed from the three independent brackets c^k_{12}, c^k_{13},
    /// c^k_{23} given as coefficient triples.
    StructureConstants(const std::array<Rational, 3>& bracket12,
                       const std::array<Rational, 3>& bracket13,
                       const std::array<Rational, 3>& bracket23);

    /// [e1,e2] = -(2/3) e3, [e1,e3] = (2/3) e2, [e2,e3] = -2 e1.
    static StructureConstants twisted_cubic_link();

    const Rational& c(int k, int i, int j) const;  // indices 1..3

    bool jacobi_holds() const;

private:
    // c_[k-1][i-1][j-1]
    std::array<std::array<std::array<Rational, 3>, 3>, 3> c_;
};

/// Graded exterior-algebra element: degree plus a sparse coefficient table
/// keyed by basis masks (bit i-1 set  <=>  index i in the subset).
class ExteriorForm {
public:
    explicit ExteriorForm(int degree = 0);

    static ExteriorForm zero(int degree) { return ExteriorForm(degree); }
    static ExteriorForm generator(int i);        // omega_i, i in 1..3
    static ExteriorForm constant(QSqrt3 value);  // degree 0
    static ExteriorForm basis(std::initializer_list<int> indices, QSqrt3 coefficient);

    int degree() const { return degree_; }
    bool is_zero() const { return coefficients_.empty(); }
    QSqrt3 coefficient(unsigned mask) const;
    const std::map<unsigned, QSqrt3>& coefficients() const { return coefficients_; }

    ExteriorForm operator-() const;
    ExteriorForm operator+(const ExteriorForm& o) const;
    ExteriorForm operator-(const ExteriorForm& o) const;
    ExteriorForm scaled(const QSqrt3& s) const;

    bool operator==(const ExteriorForm& o) const;
    bool operator!=(const ExteriorForm& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(unsigned mask, const QSqrt3& value);

    int degree_;
    std::map<unsigned, QSqrt3> coefficients_;  // no zero values stored

    friend ExteriorForm wedge(const ExteriorForm&, const ExteriorForm&);
    friend ExteriorForm exterior_d(const ExteriorForm&, const StructureConstants&);
};

/// Graded-anticommutative product; degree overflow past the 3-dimensional
/// link is rejected.
ExteriorForm wedge(const ExteriorForm& x, const ExteriorForm& y);

/// Exterior derivative for the given bracket table (linear, Leibniz).
ExteriorForm exterior_d(const ExteriorForm& x, const StructureConstants& sc);

inline ExteriorForm operator*(const QSqrt3& s, const ExteriorForm& x) { return x.scaled(s); }

/// Small dense matrix of forms of one common degree.
class MatrixForm {
public:
    MatrixForm(int rows, int cols, int degree);

    static MatrixForm column(const std::vector<ExteriorForm>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int entry_degree() const { return degree_; }

    const ExteriorForm& at(int r, int c) const;
    void set(int r, int c, ExteriorForm value);

    MatrixForm operator+(const MatrixForm& o) const;
    MatrixForm operator-(const MatrixForm& o) const;
    MatrixForm operator-() const;
    MatrixForm scaled(const QSqrt3& s) const;
    MatrixForm transpose() const;
    bool is_zero() const;

private:
    int rows_, cols_, degree_;
    std::vector<ExteriorForm> entries_;
};

/// Matrix product with entrywise wedge.
MatrixForm wedge(const MatrixForm& a, const MatrixForm& b);

/// Entrywise exterior derivative.
MatrixForm exterior_d(const MatrixForm& m, const StructureConstants& sc);

/// The displayed matrix templates of the frame-bundle Lie algebra.
MatrixForm bracket3(const std::array<ExteriorForm, 3>& v);                  // [.] : 3x3
MatrixForm bracket4(const std::array<ExteriorForm, 3>& v, int sign);        // [.]+- : 4x4
MatrixForm curly(const std::array<ExteriorForm, 4>& v);                     // {.} : 4x3

/// Connection data of the adapted twisted-cubic link frame: alpha, beta,
/// gamma and the coframe, with the normal coframe pulled back to zero.
struct FrameData {
    StructureConstants constants = StructureConstants::twisted_cubic_link();
    std::array<ExteriorForm, 3> omega;  // coframe generators
    std::array<ExteriorForm, 3> alpha;  // (-omega1/3, omega2, omega3)
    std::array<ExteriorForm, 3> gamma;  // ((2/3) omega1, 2 omega2, 2 omega3)
    MatrixForm beta;                    // 4x3 second-fundamental-form block
    FrameData();
};

struct EquationResidual {
    std::string name;
    bool pass = false;
    MatrixForm residual;
    std::vector<std::string> failures;  // offending entries, "(r,c): value"
};

struct StructureReport {
    std::vector<EquationResidual> equations;
    bool all_pass = false;
};

/// Evaluates all five second structure equations for the frame data with
/// exactly-zero residuals demanded; the algebraic equation beta = h omega is
/// verified by extracting the symmetric tensor h.
StructureReport verify_structure_equations();

/// h^a_{jk} with beta^a_j = sum_k h^a_{jk} omega_k; a in 4..7, j,k in 1..3.
class SecondFundamentalForm {
public:
    explicit SecondFundamentalForm(const MatrixForm& beta);

    const QSqrt3& entry(int a, int j, int k) const;  // a in 4..7
    bool traceless() const;                          // sum_j h^a_{jj} = 0 per a

private:
    std::array<std::array<std::array<QSqrt3, 3>, 3>, 4> h_;
};

SecondFundamentalForm second_fundamental_form();

} // namespace cayley

#endif
