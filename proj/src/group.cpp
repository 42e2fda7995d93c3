#include "modrep/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "modrep/errors.hpp"

namespace modrep {

namespace {

// (a*b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

bool is_bijection(const Permutation& g) {
    std::vector<bool> seen(g.size(), false);
    for (uint32_t v : g) {
        if (v >= g.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

}  // namespace

GroupPtr Group::from_permutations(const std::vector<Permutation>& generators, size_t order_cap) {
    size_t degree = generators.empty() ? 1 : generators.front().size();
    if (degree == 0) throw ParseError("generators must act on a nonempty domain");
    for (const auto& g : generators) {
        if (g.size() != degree) throw ParseError("generators act on different domains");
        if (!is_bijection(g)) throw ParseError("generator is not a bijection");
    }

    auto grp = std::shared_ptr<Group>(new Group());
    grp->degree_ = degree;

    Permutation id(degree);
    for (size_t i = 0; i < degree; ++i) id[i] = static_cast<uint32_t>(i);

    std::map<Permutation, uint32_t> index;
    grp->elements_.push_back(id);
    grp->words_.push_back({});
    index[id] = 0;

    for (size_t head = 0; head < grp->elements_.size(); ++head) {
        for (size_t gi = 0; gi < generators.size(); ++gi) {
            Permutation q = compose(grp->elements_[head], generators[gi]);
            auto it = index.find(q);
            if (it != index.end()) continue;
            if (grp->elements_.size() >= order_cap)
                throw GroupTooLargeError("group closure exceeds order cap " +
                                         std::to_string(order_cap));
            index[q] = static_cast<uint32_t>(grp->elements_.size());
            auto w = grp->words_[head];
            w.push_back(static_cast<uint32_t>(gi));
            grp->elements_.push_back(std::move(q));
            grp->words_.push_back(std::move(w));
        }
    }

    size_t n = grp->elements_.size();
    grp->order_ = n;
    grp->generator_elems_.resize(generators.size());
    for (size_t gi = 0; gi < generators.size(); ++gi)
        grp->generator_elems_[gi] = index.at(generators[gi]);

    grp->table_.assign(n * n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            grp->table_[a * n + b] = index.at(compose(grp->elements_[a], grp->elements_[b]));

    grp->inverse_.assign(n, 0);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (grp->table_[a * n + b] == 0) {
                grp->inverse_[a] = static_cast<uint32_t>(b);
                break;
            }
    return grp;
}

namespace {
const std::map<std::string, std::vector<Permutation>>& catalog() {
    static const std::map<std::string, std::vector<Permutation>> cat = {
        {"C2", {{1, 0}}},
        {"C3", {{1, 2, 0}}},
        {"C4", {{1, 2, 3, 0}}},
        {"C5", {{1, 2, 3, 4, 0}}},
        {"C6", {{1, 2, 3, 4, 5, 0}}},
        {"V4", {{1, 0, 2, 3}, {0, 1, 3, 2}}},
        {"S3", {{1, 0, 2}, {1, 2, 0}}},
        {"S4", {{1, 0, 2, 3}, {1, 2, 3, 0}}},
        {"A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}},
        {"D8", {{1, 2, 3, 0}, {0, 3, 2, 1}}},
        // left-regular permutations of i and j on {1,i,j,k,-1,-i,-j,-k}
        {"Q8", {{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}}},
    };
    return cat;
}

std::string canonical_name(std::string name) {
    if (name == "C2xC2") return "V4";
    return name;
}
}  // namespace

GroupPtr Group::named(const std::string& name) {
    auto it = catalog().find(canonical_name(name));
    if (it == catalog().end()) throw ParseError("unknown group name: " + name);
    // one shared instance per catalog entry, so modules built through
    // repeated named() lookups live over the literal same group object
    static std::map<std::string, GroupPtr> cache;
    auto [pos, inserted] = cache.try_emplace(it->first);
    if (inserted) pos->second = from_permutations(it->second);
    return pos->second;
}

const std::vector<std::string>& Group::catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : catalog()) v.push_back(k);
        return v;
    }();
    return names;
}

const std::vector<Permutation>& Group::catalog_generators(const std::string& name) {
    auto it = catalog().find(canonical_name(name));
    if (it == catalog().end()) throw ParseError("unknown group name: " + name);
    return it->second;
}

GroupPtr Group::parse(std::istream& in, size_t order_cap) {
    std::string line;
    size_t lineno = 0;
    size_t degree = 0;
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        auto pos = stripped.find('#');
        if (pos != std::string::npos) stripped.resize(pos);
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(stripped);
        if (degree == 0) {
            std::string kw;
            ls >> kw;
            if (kw != "degree" || !(ls >> degree) || degree == 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'degree d' header");
            continue;
        }
        std::string kw;
        ls >> kw;
        if (kw != "g:")
            throw ParseError("line " + std::to_string(lineno) + ": expected 'g: i1 ... id'");
        Permutation g;
        long v;
        while (ls >> v) {
            if (v < 1 || static_cast<size_t>(v) > degree)
                throw ParseError("line " + std::to_string(lineno) + ": image out of range");
            g.push_back(static_cast<uint32_t>(v - 1));
        }
        if (!ls.eof())
            throw ParseError("line " + std::to_string(lineno) + ": bad image list");
        if (g.size() != degree)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(degree) + " images");
        if (!is_bijection(g))
            throw ParseError("line " + std::to_string(lineno) + ": not a permutation");
        gens.push_back(std::move(g));
    }
    if (degree == 0) throw ParseError("empty group file");
    return from_permutations(gens, order_cap);
}

GroupPtr Group::parse_file(const std::string& path, size_t order_cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group file: " + path);
    return parse(in, order_cap);
}

size_t Group::element_order(size_t e) const {
    size_t k = 1, cur = e;
    while (cur != identity()) {
        cur = mul(cur, e);
        ++k;
    }
    return k;
}

size_t Group::evaluate_word(const std::vector<uint32_t>& w) const {
    size_t e = identity();
    for (uint32_t gi : w) e = mul(e, generator_elems_[gi]);
    return e;
}

void Group::validate() const {
    size_t n = order_;
    for (size_t a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (size_t b = 0; b < n; ++b) {
            size_t ab = mul(a, b), ba = mul(b, a);
            if (seen_row[ab] || seen_col[ba]) throw InvariantViolation("table is not a Latin square");
            seen_row[ab] = seen_col[ba] = true;
        }
        if (mul(a, identity()) != a || mul(identity(), a) != a)
            throw InvariantViolation("identity axiom fails");
        if (mul(a, inv(a)) != identity() || mul(inv(a), a) != identity())
            throw InvariantViolation("inverse axiom fails");
        if (evaluate_word(words_[a]) != a) throw InvariantViolation("element word inconsistent");
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            for (size_t c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InvariantViolation("associativity fails");
}

}  // namespace modrep
