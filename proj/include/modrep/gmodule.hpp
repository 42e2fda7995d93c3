#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "modrep/fp_matrix.hpp"
#include "modrep/group.hpp"

namespace modrep {

// A kG-module: one invertible matrix per group element, acting on column
// vectors.  The per-element table is precomputed from the generator
// matrices through the group's element words, so lookup is O(1) and the
// homomorphism property is checkable.  Instances share immutable storage;
// copies are cheap and thread-safe to read.
class GModule {
public:
    enum class Check {
        generator_products,  // verify action(e)*action(g) = action(e*g) for all e, generators g
        identity_only,       // trust the caller's matrices beyond the identity slot
    };

    GModule() = default;

    // Builds all element actions as word products of the generator
    // matrices, then verifies the homomorphism property (element x
    // generator products suffice: the rest follows word by word).
    static GModule from_generator_matrices(GroupPtr group, uint32_t p,
                                           const std::vector<FpMatrix>& generator_matrices);
    static GModule from_element_actions(GroupPtr group, uint32_t p,
                                        std::vector<FpMatrix> element_actions,
                                        Check check = Check::generator_products);
    static GModule zero(GroupPtr group, uint32_t p);
    static GModule trivial(GroupPtr group, uint32_t p);

    bool valid() const { return impl_ != nullptr; }
    const GroupPtr& group() const { return impl_->group; }
    uint32_t prime() const { return impl_->p; }
    size_t dim() const { return impl_->dim; }
    bool is_zero_module() const { return impl_->dim == 0; }

    const FpMatrix& action(size_t element) const { return impl_->action[element]; }
    const FpMatrix& generator_action(size_t gi) const {
        return impl_->action[impl_->group->generator_element(gi)];
    }
    std::vector<FpMatrix> generator_matrices() const;

    // Literal identity: same group object, same prime, same action table.
    bool same_module(const GModule& o) const;
    bool is_trivial_module() const;  // dim 1, every action the identity

    // Invariant check: invertibility plus the homomorphism property
    // (all pairs when all_pairs, otherwise element x generator).
    void validate(bool all_pairs = false) const;

private:
    struct Impl {
        GroupPtr group;
        uint32_t p;
        size_t dim;
        std::vector<FpMatrix> action;
    };
    std::shared_ptr<const Impl> impl_;
};

// dim = |G|; g acts by the permutation matrix of left multiplication.
GModule regular_representation(const GroupPtr& group, uint32_t p);

// Module map; matrix is (target dim) x (source dim), acting on column
// vectors, and intertwines the two actions.
struct ModuleHom {
    GModule source;
    GModule target;
    FpMatrix matrix;

    static ModuleHom zero(const GModule& source, const GModule& target);
    static ModuleHom identity(const GModule& m);
    // g after f
    static ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

    bool intertwines(bool all_elements = true) const;
    void validate() const;  // throws unless intertwines on every element
    size_t rank() const { return matrix.rank(); }
    bool injective() const { return matrix.rank() == source.dim(); }
    bool surjective() const { return matrix.rank() == target.dim(); }
};

// 0 -> U --alpha--> V --beta--> W -> 0
struct ShortExactSeq {
    GModule u, v, w;
    ModuleHom alpha, beta;

    void validate() const;  // injectivity, surjectivity, im(alpha)=ker(beta), dims
};

// Basis of Hom_kG(M, N): intertwining equations are solved for the
// generators only, then every basis hom is verified against all elements.
std::vector<ModuleHom> hom_space(const GModule& m, const GModule& n);
size_t hom_dim(const GModule& m, const GModule& n);

// Action g |-> transpose of the g^{-1} action.
GModule dual_module(const GModule& m);

struct SubmoduleResult {
    GModule sub;
    ModuleHom inclusion;   // sub -> ambient
    FpMatrix basis_rows;   // canonical RREF rows spanning the subspace
};

// Smallest G-stable subspace containing the seed columns.
SubmoduleResult spin(const GModule& m, const FpMatrix& seed_columns);

// Restriction to a subspace the caller knows is G-stable (verified).
SubmoduleResult restrict_to_stable(const GModule& m, const FpMatrix& basis_rows);

struct QuotientResult {
    GModule quot;
    ModuleHom projection;  // ambient -> quotient, surjective
    FpMatrix section;      // ambient_dim x quot_dim, projection * section = id
};

// Quotient by a G-stable subspace (rows spanning it); rejects unstable
// input.  Coordinates on the quotient are the non-pivot coordinates of the
// RREF basis, so representatives are canonical.
QuotientResult quotient(const GModule& m, const FpMatrix& subspace_rows);

// Retraction rho: V -> U with rho*alpha = id, if one exists.  Absence
// proves the sequence non-split.
std::optional<ModuleHom> split_test(const ShortExactSeq& e);

// Both inputs must be simple (caller-certified); then nonzero Hom means
// isomorphic.
bool iso_test_simple(const GModule& s, const GModule& t);

struct DirectSumModule {
    GModule sum;
    ModuleHom incl0, incl1;  // summand -> sum
    ModuleHom proj0, proj1;  // sum -> summand
};
DirectSumModule direct_sum_modules(const GModule& a, const GModule& b);

}  // namespace modrep
