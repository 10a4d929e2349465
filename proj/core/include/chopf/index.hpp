#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace chopf {

/// Raw basis index: a finite sequence of small integers. Compositions and
/// partitions are the checked views; element term maps key on words directly
/// (the b-generators additionally use part 0 for the central generator beta).
using Word = std::vector<int>;

int word_weight(std::span<const int> w);
/// "[1,2]"; the empty word prints as "[]".
std::string word_str(std::span<const int> w);

/// Ordered sequence of positive integers; the empty composition is the
/// identity of the concatenation monoid.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    /// Throws DomainError if a part is < 1.
    explicit Composition(Word parts);

    [[nodiscard]] const Word& parts() const { return parts_; }
    [[nodiscard]] int weight() const { return word_weight(parts_); }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }

    [[nodiscard]] Composition reversed() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;
    friend bool operator==(const Composition&, const Composition&) = default;

private:
    Word parts_;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Sorts the parts; throws DomainError if a part is < 1.
    explicit Partition(Word parts);

    [[nodiscard]] const Word& parts() const { return parts_; }
    [[nodiscard]] int weight() const { return word_weight(parts_); }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Word parts_;
};

/// All compositions of n in descending lexicographic order:
/// (3), (2,1), (1,2), (1,1,1). Count is 2^(n-1) for n >= 1 and 1 for n = 0.
std::vector<Composition> compositions_of(int n);

/// All partitions of n in reverse lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int n);

Composition concat(const Composition& a, const Composition& b);
Partition sort_to_partition(const Composition& c);

/// Compositions obtained from c by merging runs of adjacent parts (c itself included).
std::vector<Composition> coarsenings(const Composition& c);

std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);

} // namespace chopf
