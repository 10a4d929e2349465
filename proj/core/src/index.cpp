#include "chopf/index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>

#include "chopf/errors.hpp"

namespace chopf {

namespace {

void require_positive(const Word& w)
{
    for (int p : w)
        if (p < 1)
            throw DomainError("index parts must be >= 1, got " + word_str(w));
}

} // namespace

int word_weight(std::span<const int> w) { return std::accumulate(w.begin(), w.end(), 0); }

std::string word_str(std::span<const int> w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(w[i]);
    }
    return s + "]";
}

Composition::Composition(std::initializer_list<int> parts) : Composition(Word(parts)) {}

Composition::Composition(Word parts) : parts_(std::move(parts)) { require_positive(parts_); }

Composition Composition::reversed() const
{
    Composition r = *this;
    std::reverse(r.parts_.begin(), r.parts_.end());
    return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(Word(parts)) {}

Partition::Partition(Word parts) : parts_(std::move(parts))
{
    require_positive(parts_);
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::vector<Composition> compositions_of(int n)
{
    if (n < 0)
        throw DomainError("compositions_of: negative weight " + std::to_string(n));
    std::vector<Composition> out;
    Word cur;
    // first part descending gives descending lexicographic order
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = rest; p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw DomainError("partitions_of: negative weight " + std::to_string(n));
    std::vector<Partition> out;
    Word cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Composition concat(const Composition& a, const Composition& b)
{
    Word w = a.parts();
    w.insert(w.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(w));
}

Partition sort_to_partition(const Composition& c) { return Partition(c.parts()); }

std::vector<Composition> coarsenings(const Composition& c)
{
    std::vector<Composition> out;
    if (c.empty()) {
        out.emplace_back();
        return out;
    }
    // each of the r-1 gaps is either kept or merged
    const int gaps = c.length() - 1;
    for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
        Word w{c[0]};
        for (int g = 0; g < gaps; ++g) {
            if (mask & (1u << g))
                w.back() += c[g + 1];
            else
                w.push_back(c[g + 1]);
        }
        out.emplace_back(std::move(w));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << word_str(c.parts()); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << word_str(p.parts()); }

} // namespace chopf
