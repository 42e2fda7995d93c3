#include "modrep/gmodule.hpp"

#include <algorithm>
#include <deque>

#include "modrep/errors.hpp"

namespace modrep {

namespace {
void check_compatible(const GModule& m, const GModule& n) {
    if (m.group() != n.group()) throw std::invalid_argument("modules over different groups");
    if (m.prime() != n.prime()) throw std::invalid_argument("modules over different primes");
}
}  // namespace

GModule GModule::from_generator_matrices(GroupPtr group, uint32_t p,
                                         const std::vector<FpMatrix>& generator_matrices) {
    if (generator_matrices.size() != group->num_generators())
        throw std::invalid_argument("one matrix per group generator required");
    size_t dim = generator_matrices.empty() ? 0 : generator_matrices.front().rows();
    if (generator_matrices.empty()) {
        // trivial group: only the identity element
        std::vector<FpMatrix> acts{FpMatrix::identity(p, 0)};
        return from_element_actions(std::move(group), p, std::move(acts), Check::identity_only);
    }
    for (const auto& g : generator_matrices)
        if (g.prime() != p || g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("generator matrices must be square of equal size");
    size_t n = group->order();
    std::vector<FpMatrix> acts(n, FpMatrix(p, dim, dim));
    for (size_t e = 0; e < n; ++e) {
        FpMatrix a = FpMatrix::identity(p, dim);
        for (uint32_t gi : group->word(e)) a = a * generator_matrices[gi];
        acts[e] = std::move(a);
    }
    return from_element_actions(std::move(group), p, std::move(acts), Check::generator_products);
}

GModule GModule::from_element_actions(GroupPtr group, uint32_t p,
                                      std::vector<FpMatrix> element_actions, Check check) {
    if (element_actions.size() != group->order())
        throw std::invalid_argument("one action matrix per group element required");
    size_t dim = element_actions.front().rows();
    GModule m;
    auto impl = std::make_shared<Impl>();
    impl->group = std::move(group);
    impl->p = p;
    impl->dim = dim;
    impl->action = std::move(element_actions);
    m.impl_ = std::move(impl);
    if (!m.action(Group::identity()).is_identity())
        throw InvariantViolation("identity element must act as the identity matrix");
    if (check == Check::generator_products) m.validate(false);
    return m;
}

GModule GModule::zero(GroupPtr group, uint32_t p) {
    std::vector<FpMatrix> acts(group->order(), FpMatrix(p, 0, 0));
    return from_element_actions(std::move(group), p, std::move(acts), Check::identity_only);
}

GModule GModule::trivial(GroupPtr group, uint32_t p) {
    std::vector<FpMatrix> acts(group->order(), FpMatrix::identity(p, 1));
    return from_element_actions(std::move(group), p, std::move(acts), Check::identity_only);
}

std::vector<FpMatrix> GModule::generator_matrices() const {
    std::vector<FpMatrix> g;
    for (size_t gi = 0; gi < impl_->group->num_generators(); ++gi)
        g.push_back(generator_action(gi));
    return g;
}

bool GModule::same_module(const GModule& o) const {
    if (impl_ == o.impl_) return true;
    if (impl_->group != o.impl_->group || impl_->p != o.impl_->p || impl_->dim != o.impl_->dim)
        return false;
    return impl_->action == o.impl_->action;
}

bool GModule::is_trivial_module() const {
    if (dim() != 1) return false;
    for (const auto& a : impl_->action)
        if (!a.is_identity()) return false;
    return true;
}

void GModule::validate(bool all_pairs) const {
    const auto& g = *impl_->group;
    size_t n = g.order();
    for (size_t e = 0; e < n; ++e) {
        if (impl_->action[e].rows() != impl_->dim || impl_->action[e].cols() != impl_->dim)
            throw InvariantViolation("action matrix has wrong shape");
        if (impl_->action[e].rank() != impl_->dim)
            throw InvariantViolation("action matrix not invertible");
    }
    if (!impl_->action[Group::identity()].is_identity())
        throw InvariantViolation("identity acts nontrivially");
    if (all_pairs) {
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (impl_->action[a] * impl_->action[b] != impl_->action[g.mul(a, b)])
                    throw InvariantViolation("action is not a homomorphism");
    } else {
        // element x generator products; all pairs follow by induction on
        // words since non-generator actions are defined as word products
        for (size_t a = 0; a < n; ++a)
            for (size_t gi = 0; gi < g.num_generators(); ++gi) {
                size_t ge = g.generator_element(gi);
                if (impl_->action[a] * impl_->action[ge] != impl_->action[g.mul(a, ge)])
                    throw InvariantViolation("action is not a homomorphism");
            }
    }
}

GModule regular_representation(const GroupPtr& group, uint32_t p) {
    size_t n = group->order();
    std::vector<FpMatrix> acts;
    acts.reserve(n);
    for (size_t e = 0; e < n; ++e) {
        FpMatrix a(p, n, n);
        for (size_t h = 0; h < n; ++h) a.set(group->mul(e, h), h, 1);
        acts.push_back(std::move(a));
    }
    return GModule::from_element_actions(group, p, std::move(acts),
                                         GModule::Check::identity_only);
}

ModuleHom ModuleHom::zero(const GModule& source, const GModule& target) {
    return {source, target, FpMatrix(source.prime(), target.dim(), source.dim())};
}

ModuleHom ModuleHom::identity(const GModule& m) {
    return {m, m, FpMatrix::identity(m.prime(), m.dim())};
}

ModuleHom ModuleHom::compose(const ModuleHom& g, const ModuleHom& f) {
    if (!g.source.same_module(f.target))
        throw std::invalid_argument("compose: inner modules differ");
    return {f.source, g.target, g.matrix * f.matrix};
}

bool ModuleHom::intertwines(bool all_elements) const {
    const auto& grp = *source.group();
    if (source.group() != target.group() || source.prime() != target.prime()) return false;
    if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
    if (all_elements) {
        for (size_t e = 0; e < grp.order(); ++e)
            if (matrix * source.action(e) != target.action(e) * matrix) return false;
    } else {
        for (size_t gi = 0; gi < grp.num_generators(); ++gi) {
            size_t e = grp.generator_element(gi);
            if (matrix * source.action(e) != target.action(e) * matrix) return false;
        }
    }
    return true;
}

void ModuleHom::validate() const {
    if (!intertwines(true)) throw InvariantViolation("map is not a module homomorphism");
}

void ShortExactSeq::validate() const {
    alpha.validate();
    beta.validate();
    if (!alpha.source.same_module(u) || !alpha.target.same_module(v) ||
        !beta.source.same_module(v) || !beta.target.same_module(w))
        throw InvariantViolation("short exact sequence wiring mismatch");
    if (v.dim() != u.dim() + w.dim())
        throw InvariantViolation("dim V != dim U + dim W");
    if (!alpha.injective()) throw InvariantViolation("alpha not injective");
    if (!beta.surjective()) throw InvariantViolation("beta not surjective");
    if (!(beta.matrix * alpha.matrix).is_zero())
        throw InvariantViolation("beta o alpha != 0");
    // with the above, im(alpha) and ker(beta) have equal dimension and one
    // contains the other, hence coincide
}

std::vector<ModuleHom> hom_space(const GModule& m, const GModule& n) {
    check_compatible(m, n);
    uint32_t p = m.prime();
    size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    size_t unknowns = dm * dn;  // vec(X), column-stacked: entry (i,j) at j*dn + i
    const auto& grp = *m.group();
    size_t ngen = grp.num_generators();
    FpMatrix constraints(p, std::max<size_t>(1, ngen) * unknowns, unknowns);
    if (ngen == 0) constraints = FpMatrix(p, 0, unknowns);
    for (size_t gi = 0; gi < ngen; ++gi) {
        size_t e = grp.generator_element(gi);
        // X * A_M(g) - A_N(g) * X = 0  <=>  (A_M^T (x) I - I (x) A_N) vec X = 0
        FpMatrix c = FpMatrix::kronecker(m.action(e).transposed(), FpMatrix::identity(p, dn)) -
                     FpMatrix::kronecker(FpMatrix::identity(p, dm), n.action(e));
        for (size_t i = 0; i < unknowns; ++i)
            for (size_t j = 0; j < unknowns; ++j)
                constraints.set(gi * unknowns + i, j, c(i, j));
    }
    FpMatrix kern = constraints.kernel_basis();
    std::vector<ModuleHom> out;
    for (size_t b = 0; b < kern.cols(); ++b) {
        FpMatrix x(p, dn, dm);
        for (size_t j = 0; j < dm; ++j)
            for (size_t i = 0; i < dn; ++i) x.set(i, j, kern(j * dn + i, b));
        ModuleHom h{m, n, std::move(x)};
        h.validate();
        out.push_back(std::move(h));
    }
    return out;
}

size_t hom_dim(const GModule& m, const GModule& n) { return hom_space(m, n).size(); }

GModule dual_module(const GModule& m) {
    const auto& grp = *m.group();
    std::vector<FpMatrix> acts;
    acts.reserve(grp.order());
    for (size_t e = 0; e < grp.order(); ++e)
        acts.push_back(m.action(grp.inv(e)).transposed());
    return GModule::from_element_actions(m.group(), m.prime(), std::move(acts),
                                         GModule::Check::identity_only);
}

namespace {

// Builds the submodule GModule sitting on the canonical RREF basis rows.
// Coordinates of a vector in the span are read off at the pivot columns.
SubmoduleResult make_submodule(const GModule& m, const RowSpace& space) {
    uint32_t p = m.prime();
    FpMatrix basis = space.basis_matrix();
    size_t s = basis.rows();
    FpMatrix incl = basis.transposed();  // dim x s
    const auto& pivots = space.pivots();
    const auto& grp = *m.group();
    std::vector<FpMatrix> acts;
    acts.reserve(grp.order());
    for (size_t e = 0; e < grp.order(); ++e) {
        FpMatrix moved = m.action(e) * incl;  // dim x s
        FpMatrix a(p, s, s);
        for (size_t i = 0; i < s; ++i)
            for (size_t j = 0; j < s; ++j) a.set(i, j, moved(pivots[i], j));
        acts.push_back(std::move(a));
    }
    GModule sub = GModule::from_element_actions(m.group(), p, std::move(acts),
                                                GModule::Check::identity_only);
    return {sub, ModuleHom{sub, m, std::move(incl)}, std::move(basis)};
}

}  // namespace

SubmoduleResult spin(const GModule& m, const FpMatrix& seed_columns) {
    uint32_t p = m.prime();
    size_t d = m.dim();
    RowSpace space(p, d);
    std::deque<std::vector<uint32_t>> todo;
    for (size_t c = 0; c < seed_columns.cols(); ++c) {
        auto v = seed_columns.col_vec(c);
        if (space.insert(v)) todo.push_back(std::move(v));
    }
    size_t ngen = m.group()->num_generators();
    while (!todo.empty() && space.dim() < d) {
        auto v = std::move(todo.front());
        todo.pop_front();
        FpMatrix vc = FpMatrix::column_vector(p, v);
        for (size_t gi = 0; gi < ngen && space.dim() < d; ++gi) {
            auto w = (m.generator_action(gi) * vc).col_vec(0);
            if (space.insert(w)) todo.push_back(std::move(w));
        }
    }
    SubmoduleResult r = make_submodule(m, space);
    r.inclusion.validate();
    return r;
}

SubmoduleResult restrict_to_stable(const GModule& m, const FpMatrix& basis_rows) {
    RowSpace space(m.prime(), m.dim());
    for (size_t i = 0; i < basis_rows.rows(); ++i) space.insert(basis_rows.row_vec(i));
    size_t before = space.dim();
    // stability check: generators must not enlarge the span
    for (size_t gi = 0; gi < m.group()->num_generators(); ++gi) {
        FpMatrix moved = m.generator_action(gi) * space.basis_matrix().transposed();
        for (size_t c = 0; c < moved.cols(); ++c)
            if (!space.contains(moved.col_vec(c)))
                throw InvariantViolation("subspace is not G-stable");
    }
    (void)before;
    SubmoduleResult r = make_submodule(m, space);
    r.inclusion.validate();
    return r;
}

QuotientResult quotient(const GModule& m, const FpMatrix& subspace_rows) {
    uint32_t p = m.prime();
    size_t d = m.dim();
    RowSpace space(p, d);
    for (size_t i = 0; i < subspace_rows.rows(); ++i) space.insert(subspace_rows.row_vec(i));
    for (size_t gi = 0; gi < m.group()->num_generators(); ++gi) {
        FpMatrix moved = m.generator_action(gi) * space.basis_matrix().transposed();
        for (size_t c = 0; c < moved.cols(); ++c)
            if (!space.contains(moved.col_vec(c)))
                throw InvariantViolation("quotient by a subspace that is not G-stable");
    }
    FpMatrix basis = space.basis_matrix();
    size_t s = basis.rows();
    const auto& pivots = space.pivots();
    std::vector<bool> is_pivot(d, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < d; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    size_t q = d - s;
    // projection: canonical representative (pivot coordinates eliminated),
    // read off at the free coordinates
    FpMatrix proj(p, q, d);
    for (size_t j = 0; j < q; ++j) {
        proj.set(j, free_cols[j], 1);
        for (size_t i = 0; i < s; ++i) {
            uint32_t v = basis(i, free_cols[j]);
            if (v) proj.set(j, pivots[i], p - v);
        }
    }
    FpMatrix section(p, d, q);
    for (size_t j = 0; j < q; ++j) section.set(free_cols[j], j, 1);
    const auto& grp = *m.group();
    std::vector<FpMatrix> acts;
    acts.reserve(grp.order());
    for (size_t e = 0; e < grp.order(); ++e) acts.push_back(proj * m.action(e) * section);
    GModule quot = GModule::from_element_actions(m.group(), p, std::move(acts),
                                                 GModule::Check::identity_only);
    ModuleHom projection{m, quot, std::move(proj)};
    projection.validate();
    return {quot, std::move(projection), std::move(section)};
}

std::optional<ModuleHom> split_test(const ShortExactSeq& e) {
    uint32_t p = e.v.prime();
    size_t du = e.u.dim(), dv = e.v.dim();
    if (du == 0) return ModuleHom::zero(e.v, e.u);
    size_t unknowns = du * dv;  // vec(rho), column-stacked
    const auto& grp = *e.v.group();
    size_t ngen = grp.num_generators();
    // intertwining rows (homogeneous) + retraction rows rho*alpha = id
    FpMatrix lhs(p, ngen * unknowns + du * du, unknowns);
    FpMatrix rhs(p, lhs.rows(), 1);
    for (size_t gi = 0; gi < ngen; ++gi) {
        size_t el = grp.generator_element(gi);
        FpMatrix c =
            FpMatrix::kronecker(e.v.action(el).transposed(), FpMatrix::identity(p, du)) -
            FpMatrix::kronecker(FpMatrix::identity(p, dv), e.u.action(el));
        for (size_t i = 0; i < unknowns; ++i)
            for (size_t j = 0; j < unknowns; ++j) lhs.set(gi * unknowns + i, j, c(i, j));
    }
    FpMatrix ret = FpMatrix::kronecker(e.alpha.matrix.transposed(), FpMatrix::identity(p, du));
    for (size_t i = 0; i < du * du; ++i)
        for (size_t j = 0; j < unknowns; ++j) lhs.set(ngen * unknowns + i, j, ret(i, j));
    for (size_t i = 0; i < du; ++i) rhs.set(ngen * unknowns + i * du + i, 0, 1);
    auto sol = lhs.solve_right(rhs);
    if (!sol) return std::nullopt;
    FpMatrix rho(p, du, dv);
    for (size_t j = 0; j < dv; ++j)
        for (size_t i = 0; i < du; ++i) rho.set(i, j, sol->x(j * du + i, 0));
    ModuleHom h{e.v, e.u, std::move(rho)};
    h.validate();
    if (!(h.matrix * e.alpha.matrix).is_identity())
        throw InvariantViolation("retraction does not invert alpha");
    return h;
}

bool iso_test_simple(const GModule& s, const GModule& t) {
    check_compatible(s, t);
    if (s.dim() != t.dim()) return false;
    return hom_dim(s, t) > 0;
}

DirectSumModule direct_sum_modules(const GModule& a, const GModule& b) {
    check_compatible(a, b);
    uint32_t p = a.prime();
    const auto& grp = *a.group();
    std::vector<FpMatrix> acts;
    acts.reserve(grp.order());
    for (size_t e = 0; e < grp.order(); ++e)
        acts.push_back(FpMatrix::direct_sum(a.action(e), b.action(e)));
    GModule sum = GModule::from_element_actions(a.group(), p, std::move(acts),
                                                GModule::Check::identity_only);
    size_t da = a.dim(), db = b.dim();
    FpMatrix i0(p, da + db, da), i1(p, da + db, db), p0(p, da, da + db), p1(p, db, da + db);
    for (size_t i = 0; i < da; ++i) {
        i0.set(i, i, 1);
        p0.set(i, i, 1);
    }
    for (size_t i = 0; i < db; ++i) {
        i1.set(da + i, i, 1);
        p1.set(i, da + i, 1);
    }
    return {sum, ModuleHom{a, sum, std::move(i0)}, ModuleHom{b, sum, std::move(i1)},
            ModuleHom{sum, a, std::move(p0)}, ModuleHom{sum, b, std::move(p1)}};
}

}  // namespace modrep
