#pragma once

#include <boost/dynamic_bitset.hpp>
#include <initializer_list>
#include <vector>

#include "cmvf/types.hpp"

namespace cmvf {

/// A subset of the cells of one fixed complex, backed by a bitset.
///
/// All binary operations require both operands to live over the same
/// universe size; mixing sets of different complexes is a logic error.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::size_t universe) : bits_(universe) {}
    CellSet(std::size_t universe, std::initializer_list<CellId> cells) : bits_(universe) {
        for (CellId c : cells) insert(c);
    }

    static CellSet full(std::size_t universe) {
        CellSet s(universe);
        s.bits_.set();
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return !bits_.any(); }

    bool contains(CellId c) const { return bits_.test(static_cast<std::size_t>(c)); }
    void insert(CellId c) { bits_.set(static_cast<std::size_t>(c)); }
    void erase(CellId c) { bits_.reset(static_cast<std::size_t>(c)); }

    CellSet& operator|=(const CellSet& o) { bits_ |= o.bits_; return *this; }
    CellSet& operator&=(const CellSet& o) { bits_ &= o.bits_; return *this; }
    CellSet& operator-=(const CellSet& o) { bits_ -= o.bits_; return *this; }

    friend CellSet operator|(CellSet a, const CellSet& b) { a |= b; return a; }
    friend CellSet operator&(CellSet a, const CellSet& b) { a &= b; return a; }
    friend CellSet operator-(CellSet a, const CellSet& b) { a -= b; return a; }

    bool operator==(const CellSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const CellSet& o) const { return bits_ != o.bits_; }

    bool subset_of(const CellSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const CellSet& o) const { return bits_.intersects(o.bits_); }

    CellSet complement() const {
        CellSet s(*this);
        s.bits_.flip();
        return s;
    }

    /// Members in increasing id order.
    std::vector<CellId> to_vector() const {
        std::vector<CellId> v;
        v.reserve(count());
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
            v.push_back(static_cast<CellId>(i));
        return v;
    }

    CellId first() const {
        auto i = bits_.find_first();
        return i == boost::dynamic_bitset<>::npos ? kNoCell : static_cast<CellId>(i);
    }

    template <typename F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
            f(static_cast<CellId>(i));
    }

private:
    boost::dynamic_bitset<> bits_;
};

} // namespace cmvf
