#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace semitotal {

/// Fixed-width set of vertices over the range 0..n-1 of one graph.
///
/// Every set operation requires both operands to share the same width;
/// mixing widths is a programming error and throws std::invalid_argument.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    class Iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        Iterator() = default;
        Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

        int operator*() const { return pos_; }
        Iterator& operator++() {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        Iterator operator++(int) {
            Iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        int pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int width);
    VertexSet(int width, std::initializer_list<int> members);
    VertexSet(int width, const std::vector<int>& members);

    static VertexSet full(int width);

    int width() const { return width_; }
    int size() const;
    bool empty() const;

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    void clear();

    /// Smallest member >= from, or width() if none.
    int next(int from) const;
    int first() const { return next(0); }

    Iterator begin() const { return {this, first()}; }
    Iterator end() const { return {this, width_}; }

    std::vector<int> members() const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const = default;

    /// Lexicographic order on the sorted member lists.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

    /// "{0,2,4}"
    std::string to_string() const;

private:
    void check_member(int v) const;
    void check_width(const VertexSet& other) const;

    int width_ = 0;
    std::vector<Word> words_;
};

}  // namespace semitotal
