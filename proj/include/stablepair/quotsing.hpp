/**
 * @file quotsing.hpp
 * @brief Cyclic quotient singularities and their resolution invariants.
 *
 * Covers the 1/r(1,a) bookkeeping used throughout: minimal resolution chains,
 * the change in K^2 and in K^2+rho on passing to the resolution, recognition
 * of the smoothable class 1/dn^2(1,dna-1), and exact intersection-theory on
 * resolution cycles (cusps).
 */
#pragma once

#include "stablepair/contfrac.hpp"
#include "stablepair/rational.hpp"

#include <optional>
#include <vector>

namespace stablepair {

// The singularity 1/r(1,a). The pair (r,a) is stored as given (validated
// coprime and in range); canonical() switches to the representative with the
// smaller second weight, since 1/r(1,a) and 1/r(1,a') are the same germ when
// a*a' = 1 mod r. Comparisons are by canonical form. r = 1 is the smooth
// point, with a = 0 and an empty resolution.
class CyclicQuotient {
public:
    CyclicQuotient(Int r, Int a);

    const Int& r() const { return r_; }
    const Int& a() const { return a_; }

    bool is_smooth() const { return r_ == 1; }

    // a' with a*a' = 1 mod r (0 for the smooth point).
    Int a_inverse() const;

    CyclicQuotient canonical() const;

    friend bool operator==(const CyclicQuotient& x, const CyclicQuotient& y);
    friend bool operator<(const CyclicQuotient& x, const CyclicQuotient& y);

private:
    Int r_;
    Int a_;
};

// Self-intersections -b_i of the minimal resolution chain; empty for the
// smooth point.
std::vector<Int> resolve(const CyclicQuotient& s);

// Number of exceptional curves in the minimal resolution chain.
Int chain_length(const CyclicQuotient& s);

// Z_K^2 for the resolution chain, by the closed formula
//   E^2 + 4 - (a + a' + 2)/r,  E = E_1 + ... + E_k.
// Equals zk_squared_via_resolution (checked as a standing invariant); 0 for
// the smooth point.
Rational zk_squared(const CyclicQuotient& s);

// Independent route to Z_K^2: solve Z.E_j = 2 - b_j on the chain exactly and
// return Z^2.
Rational zk_squared_via_resolution(const CyclicQuotient& s);

// Total change in K^2 + rho on passing to the minimal resolution:
// zk_squared + chain length. Vanishes exactly on the class 1/dn^2(1,dna-1).
Rational k2rho_change(const CyclicQuotient& s);

// Decomposition r = d*n^2 with second weight dna - 1 mod r, gcd(a,n) = 1.
struct ClassT {
    Int d;
    Int n;
    Int a;
};

// Recognizes 1/dn^2(1,dna-1), testing the stored representative first and
// then its inverse form, largest n first. Empty when the singularity is not
// of this class.
std::optional<ClassT> is_class_T(const CyclicQuotient& s);

// True iff is_class_T yields (1,n,a) with n not divisible by 3, the condition
// for appearing on a degeneration of the projective plane. Smooth points
// qualify trivially.
bool is_p2_admissible(const CyclicQuotient& s);

// Gorenstein index of 1/r(1,a): smallest N with N*K Cartier, i.e.
// r / gcd(r, a+1). Equals n for 1/dn^2(1,dna-1).
Int quotient_index(const CyclicQuotient& s);

// A cycle of smooth rational curves with self-intersections e_i <= -2,
// cyclically adjacent, length >= 3. The exceptional locus of a cusp
// resolution.
class ResolutionCycle {
public:
    explicit ResolutionCycle(std::vector<long long> self_intersections);

    const std::vector<long long>& self_intersections() const { return e_; }
    std::size_t length() const { return e_.size(); }

private:
    std::vector<long long> e_;
};

// (sum a_i E_i)^2 where (sum a_i E_i).E_j = -2 - e_j, solved exactly on the
// cycle intersection matrix. Throws when the matrix is not negative definite
// (e.g. a cycle of (-2)-curves, which is degenerate).
Rational cycle_krel_squared(const ResolutionCycle& c);

// 10*h1 + cycle_krel_squared + length - 1 (second Betti number = cycle
// length, first Betti number = 1 for a cycle). h1 is caller-supplied; a cusp
// cycle has h1 = 1.
Int mu_minus(const ResolutionCycle& c, long long h1);

// Tagged germ descriptor for the singularity kinds tracked by the surface
// layer: interior quotient singularities, the normal-crossing quotients
// (xy=0) in 1/r(1,-1,a) along a double curve, boundary-pair germs, and the
// strictly log canonical kinds.
enum class GermTag {
    smooth,
    du_val,
    t_singularity,    // 1/dn^2(1,dna-1), parameters (d,n,a)
    cyclic_lt,        // 1/r(1,a)
    nc_quotient,      // (xy=0) in 1/r(1,-1,a)
    pinch_point,      // (x^2 = y^2 z)
    lc_pair_delta,    // boundary germ (1/r(1,a), one branch), Diff share 1 - 1/r
    lc_pair_2delta,   // boundary germ (1/r(1,a), two branches), share 1
    dihedral_delta,   // folded boundary germ, share 1
    cusp,
    simple_elliptic,
};

struct GermKind {
    GermTag tag = GermTag::smooth;
    Int r = 1;  // cyclic_lt, nc_quotient, lc_pair_delta, lc_pair_2delta
    Int a = 0;
    Int d = 0;  // t_singularity only
    Int n = 0;

    static GermKind Smooth() { return {}; }
    static GermKind DuVal() { return {GermTag::du_val, 1, 0, 0, 0}; }
    static GermKind TSingularity(Int d, Int n, Int a);
    static GermKind CyclicLT(Int r, Int a);
    static GermKind NCQuotient(Int r, Int a);
    static GermKind PinchPoint() { return {GermTag::pinch_point, 1, 0, 0, 0}; }
    static GermKind LCPairDelta(Int r, Int a);
    static GermKind LCPair2Delta(Int r, Int a);
    static GermKind DihedralDelta() { return {GermTag::dihedral_delta, 1, 0, 0, 0}; }
    static GermKind Cusp() { return {GermTag::cusp, 1, 0, 0, 0}; }
    static GermKind SimpleElliptic() { return {GermTag::simple_elliptic, 1, 0, 0, 0}; }
};

// Index of the germ for the "index at most d" audit: n for class T interior
// points, r/gcd(r,a+1) for general cyclic quotients, r for nc quotients, 1
// for the Gorenstein kinds.
Int germ_index(const GermKind& g);

bool operator==(const GermKind& x, const GermKind& y);

}  // namespace stablepair
