#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polyop/family.hpp"

namespace polyop {

// Closure of the codimension-one faces lying in exactly one facet.
// Requires a pure complex of dimension >= 0 with no ridge in three or more facets.
Complex combinatorial_boundary(const Complex& kc);

// Alternating count of nonempty faces. Throws a domain error on the void complex.
int euler_characteristic(const Complex& kc);

enum class Shape { sphere, ball, other };

struct Verdict {
    Shape shape = Shape::other;
    int dim = 0;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Exact recognition of PL spheres and balls up to dimension 2, ignoring ghost vertices.
// {empty set} is the (-1)-sphere. Throws an unsupported error above dimension 2.
Verdict recognize_low_dim(const Complex& kc);
std::string to_string(const Verdict& v);

enum class Claim { sphere, ball, unknown };

class PLCertificate {
public:
    static PLCertificate axiom_simplex(int n);
    static PLCertificate axiom_boundary(int n);
    static PLCertificate from_recognizer(const Verdict& v);
    static PLCertificate unknown(std::string reason);
    static PLCertificate join(const PLCertificate& a, const PLCertificate& b);
    static PLCertificate boundary_of(const PLCertificate& ball);
    static PLCertificate neat(const PLCertificate& a, int k, const PLCertificate& b);
    static PLCertificate sphere_action(const PLCertificate& sphere, int k, const PLCertificate& ball);
    static PLCertificate ghost(const PLCertificate& c, int position);

    Claim claim() const { return claim_; }
    int dim() const { return dim_; }
    bool is(Claim c, int d) const { return claim_ == c && dim_ == d; }
    const std::string& rule() const { return rule_; }
    const std::vector<PLCertificate>& premises() const { return *premises_; }
    std::string claim_text() const;
    // One node per line, premises indented below their conclusion.
    std::string describe() const;

private:
    PLCertificate(Claim c, int d, std::string rule, std::vector<PLCertificate> premises = {});
    Claim claim_ = Claim::unknown;
    int dim_ = 0;
    std::string rule_;
    std::shared_ptr<const std::vector<PLCertificate>> premises_;
};

struct CertifiedComplex {
    Complex complex;
    PLCertificate certificate;
};

CertifiedComplex certify_simplex(int n);
CertifiedComplex certify_boundary(int n);
CertifiedComplex certify_by_recognizer(const Complex& kc);
CertifiedComplex certified_join(const CertifiedComplex& a, const CertifiedComplex& b);

// A PL ball with its boundary as sub complex and no interior vertices.
class NeatPair {
public:
    static NeatPair simplex(int n);
    // Checks the boundary and interior-vertex conditions, and the recognizer when dim <= 2.
    static NeatPair make(const RelativePair& pair, const PLCertificate& ball);
    static NeatPair recognized(const RelativePair& pair);
    static NeatPair with_ghost(const NeatPair& p, int position);

    const RelativePair& pair() const { return pair_; }
    const PLCertificate& total_certificate() const { return total_; }
    const PLCertificate& sub_certificate() const { return sub_; }
    int dim() const { return total_.dim(); }

private:
    NeatPair(RelativePair p, PLCertificate total, PLCertificate sub)
        : pair_(std::move(p)), total_(std::move(total)), sub_(std::move(sub)) {}
    friend NeatPair neat_compose(const NeatPair&, int, const NeatPair&);
    RelativePair pair_;
    PLCertificate total_;
    PLCertificate sub_;
};

// Mask of non-ghost vertices of total that are not vertices of sub.
Mask interior_vertices(const RelativePair& p);

// Throws an internal error if a checked postcondition fails.
NeatPair neat_compose(const NeatPair& p, int k, const NeatPair& q);

// Acting on a sphere at slot k by a neat pair of dimension q gives a sphere of dimension d+q.
CertifiedComplex act_on_sphere(const CertifiedComplex& sphere, int k, const NeatPair& q);

// Applies J_i - 1 wedges at each slot i, from the last slot to the first.
Complex j_construction(const Complex& kc, const std::vector<int>& j);
CertifiedComplex certified_j_construction(const CertifiedComplex& sphere, const std::vector<int>& j);

}  // namespace polyop
