#pragma once

#include <string>
#include <vector>

#include "polyop/base_operads.hpp"
#include "polyop/family.hpp"
#include "polyop/laws.hpp"
#include "polyop/scpx.hpp"

namespace polyop {

OperadInstance<PermElement> perm_instance();
// Full power set of Perm (empty set absorbs); arities from 0.
OperadInstance<Subset> power_perm_instance();
// Nonempty subsets under substitution.
OperadInstance<Subset> comtrias_instance();
OperadInstance<Subset> idemcom_instance(Variant variant);
OperadInstance<Family> hypergraph_instance(Variant variant, bool reduced);
OperadInstance<Complex> scpx_instance(Variant variant, bool nonempty);
OperadInstance<Family> transversal_instance(TransversalMode mode, Variant variant);
OperadInstance<RelativePair> relscpx_instance();

enum class NamedFamily { trivial, discrete, simplex, boundary };
// One named complex per arity, checked for closure under the given composition.
OperadInstance<Complex> named_suboperad_instance(NamedFamily family, Variant variant);

// Substitution that forgets the faces through the slot; it breaks the laws on purpose.
OperadInstance<Complex> broken_subst_instance();
// Substitution that inserts the inner complex with its vertices reversed; breaks the laws on purpose.
OperadInstance<Complex> mirrored_subst_instance();

struct RegisteredOperad {
    std::string name;
    std::string description;
    int default_bound;
};
const std::vector<RegisteredOperad>& registered_operads();

// Throws a domain error for unknown names.
LawReport run_registered(const std::string& name, int arity_bound, const LawOptions& options);

}  // namespace polyop
