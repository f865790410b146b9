#include "semitotal/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace semitotal {

namespace {

int words_for(int width) { return (width + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

}  // namespace

VertexSet::VertexSet(int width) : width_(width), words_(static_cast<std::size_t>(words_for(width)), 0) {
    if (width < 0) throw std::invalid_argument("VertexSet: negative width");
}

VertexSet::VertexSet(int width, std::initializer_list<int> members) : VertexSet(width) {
    for (int v : members) insert(v);
}

VertexSet::VertexSet(int width, const std::vector<int>& members) : VertexSet(width) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::full(int width) {
    VertexSet s(width);
    for (auto& w : s.words_) w = ~Word{0};
    if (int tail = width % kWordBits; tail != 0) s.words_.back() = (Word{1} << tail) - 1;
    return s;
}

int VertexSet::size() const {
    int count = 0;
    for (Word w : words_) count += std::popcount(w);
    return count;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

void VertexSet::check_member(int v) const {
    if (v < 0 || v >= width_)
        throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside 0.." +
                                std::to_string(width_ - 1));
}

void VertexSet::check_width(const VertexSet& other) const {
    if (other.width_ != width_)
        throw std::invalid_argument("VertexSet: width mismatch (" + std::to_string(width_) + " vs " +
                                    std::to_string(other.width_) + ")");
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= width_) return false;
    return (words_[static_cast<std::size_t>(v / kWordBits)] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v / kWordBits)] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v / kWordBits)] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

int VertexSet::next(int from) const {
    if (from >= width_) return width_;
    auto wi = static_cast<std::size_t>(from / kWordBits);
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (w != 0) return static_cast<int>(wi) * kWordBits + std::countr_zero(w);
        if (++wi == words_.size()) return width_;
        w = words_[wi];
    }
}

std::vector<int> VertexSet::members() const { return {begin(), end()}; }

bool VertexSet::intersects(const VertexSet& other) const {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    auto am = a.members();
    auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (int v : *this) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    }
    return out + "}";
}

}  // namespace semitotal
