#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace modrep {

// Permutation of {0..d-1} as its image list.
using Permutation = std::vector<uint32_t>;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite group stored as a full multiplication table, built by BFS closure
// over permutation generators.  Element 0 is the identity; elements are
// numbered in BFS discovery order, and every element carries one word in
// the generators (empty word for the identity).
class Group {
public:
    static constexpr size_t kDefaultOrderCap = 512;

    static GroupPtr from_permutations(const std::vector<Permutation>& generators,
                                      size_t order_cap = kDefaultOrderCap);
    // Catalog: C2 C3 C4 C5 V4 (alias C2xC2) S3 S4 A4 D8 Q8 C6.
    static GroupPtr named(const std::string& name);
    static const std::vector<std::string>& catalog_names();
    static const std::vector<Permutation>& catalog_generators(const std::string& name);

    // Plain-text format: first line "degree d", then one generator per line
    // as "g: i1 i2 ... id" with 1-based images.
    static GroupPtr parse(std::istream& in, size_t order_cap = kDefaultOrderCap);
    static GroupPtr parse_file(const std::string& path, size_t order_cap = kDefaultOrderCap);

    size_t order() const { return order_; }
    size_t degree() const { return degree_; }
    size_t num_generators() const { return generator_elems_.size(); }

    size_t mul(size_t a, size_t b) const { return table_[a * order_ + b]; }
    size_t inv(size_t a) const { return inverse_[a]; }
    static constexpr size_t identity() { return 0; }

    size_t generator_element(size_t gi) const { return generator_elems_[gi]; }
    const Permutation& element_perm(size_t e) const { return elements_[e]; }
    const Permutation& generator_perm(size_t gi) const {
        return elements_[generator_elems_[gi]];
    }
    // Word in generator indices whose left-to-right product is element e.
    const std::vector<uint32_t>& word(size_t e) const { return words_[e]; }

    size_t element_order(size_t e) const;
    size_t evaluate_word(const std::vector<uint32_t>& w) const;

    // Full axioms check (Latin square, associativity over all triples,
    // inverses, word consistency).  Desk-scale only; used by tests.
    void validate() const;

private:
    Group() = default;

    size_t order_ = 1;
    size_t degree_ = 1;
    std::vector<uint32_t> table_;    // order x order, row-major
    std::vector<uint32_t> inverse_;  // per element
    std::vector<Permutation> elements_;
    std::vector<uint32_t> generator_elems_;
    std::vector<std::vector<uint32_t>> words_;
};

}  // namespace modrep
