#pragma once

#include <string>
#include <variant>

#include "oscdirac/group.hpp"
#include "oscdirac/linalg.hpp"

namespace oscdirac {

/// Labels of the irreducible unitary representations: the characters C_d, the
/// infinite-dimensional S_a^tau on L^2(S^1), and the Fock models F_{c,d}.
struct IrrepLabel {
    enum class Kind { C, S, F };
    Kind kind = Kind::C;
    double d = 0.0;    // C and F
    double a = 0.0;    // S only, a > 0
    double tau = 0.0;  // S only, in [0,1)
    double c = 0.0;    // F only, c != 0

    static IrrepLabel C(double d);
    static IrrepLabel S(double a, double tau);
    static IrrepLabel F(double c, double d);

    std::string str() const;
    static IrrepLabel parse(const std::string& s);

    friend bool operator==(const IrrepLabel& x, const IrrepLabel& y);
};

/// Finite matrix truncation of an irreducible representation: the matrices of
/// the derived representation on the first (2N+1 for S, N+1 for F, 1 for C)
/// basis vectors. All matrices are exact on interior indices; only rows and
/// columns near the truncation boundary are affected by the cut.
struct RepTruncation {
    IrrepLabel label;
    int N = 0;             // truncation parameter
    int dim = 0;           // matrix dimension
    int basis_offset = 0;  // basis index 0 corresponds to mode basis_offset (S: -N)

    CMat op_Z;      // sigma_*(Z)
    CMat op_T;      // sigma_*(T)
    CMat op_Nplus;  // sigma_*(X + iY)
    CMat op_Nminus; // sigma_*(X - iY)

    CMat op_X() const { return 0.5 * (op_Nplus + op_Nminus); }
    CMat op_Y() const { return complexd(0, -0.5) * (op_Nplus - op_Nminus); }

    /// Interior basis-index range [lo, hi]: indices at distance >= 2 from any
    /// truncated boundary. The 0 end of a Fock model is exact, not truncated.
    int interior_lo() const;
    int interior_hi() const;
};

/// Builds the truncated matrix model. Requires N >= 2 and a valid label
/// (a > 0 for S, c != 0 for F).
RepTruncation build_truncation(const IrrepLabel& label, int N);

/// The Casimir matrix  sigma(X)^2 + sigma(Y)^2 + 2 sigma(Z) sigma(T).
CMat casimir_matrix(const RepTruncation& rep);

/// Scalar by which the Casimir Omega acts: 0 on C_d, -4 pi^2 a^2 on S_a^tau,
/// -2 pi c (4 pi d + 1) on F_{c,d} for c > 0 and -2 pi c (4 pi d - 1) for c < 0.
double casimir_value(const IrrepLabel& label);

/// Pullback of a representation label along an automorphism, per the table:
/// T_u fixes C and S and maps F_{c,d} to F_{c,d+uc}; F_S maps C_d to C_{eps d},
/// S_a^tau to S_{|det S|^{1/2} a}^{eps tau}, F_{c,d} to F_{det(S) c, eps d};
/// C_eta acts trivially.
IrrepLabel pullback_label(const Automorphism& f, const IrrepLabel& label);

}  // namespace oscdirac
