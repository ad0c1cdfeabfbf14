// Internal helper shared by the cross and router constructions.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eedp/wall.hpp"

namespace eedp::detail {

// Walks a wall: down a column, along a row, across a jump (matched walls
// only) or along an off-wall path. Moves leaving an x^- first take the split
// edge.
class Walker {
public:
    Walker(const MatchedWall& mw, int i, int r, bool plus) : Walker(mw.wall, i, r, plus) { mw_ = &mw; }
    Walker(const Wall& w, int i, int r, bool plus) : w_(w) {
        ci_ = i;
        cp_ = w_.row(r);
        out_ = plus;
        path_.origin = plus ? w_.out_vertex(i, r) : w_.in_vertex(i, r);
    }
    Walker& split() {
        if (out_) return *this;
        if (w_.interior(ci_)) push(w_.split[w_.cell(ci_, cp_)]);
        out_ = true;
        return *this;
    }
    Walker& down(int r) {
        r = w_.row(r);
        for (int guard = 0; cp_ != r; ++guard) {
            if (guard > w_.nh) throw std::logic_error("runaway descent");
            split();
            push(w_.down[w_.cell(ci_, cp_)]);
            cp_ = w_.row(cp_ + 1);
            out_ = false;
        }
        return *this;
    }
    Walker& horiz(int c) {
        if (c == ci_) return *this;
        if (!w_.valid_column(c)) throw std::logic_error("column out of range");
        const bool right = c > ci_;
        if (right != (cp_ % 2 == 1))
            throw std::logic_error("row " + std::to_string(cp_) + " runs the other way");
        while (ci_ != c) {
            split();
            const int nx = ci_ + (right ? 1 : -1);
            push(w_.side[w_.cell(std::min(ci_, nx), cp_)]);
            ci_ = nx;
            out_ = false;
        }
        return *this;
    }
    Walker& jump() {
        if (out_ && w_.interior(ci_)) throw std::logic_error("jump must leave an x^-");
        if (!mw_) throw std::logic_error("jump needs a matched wall");
        const int k = mw_->matching.by_tail(ci_, cp_);
        if (k < 0) throw std::logic_error("no matching edge at the current cell");
        path_.edges.push_back(mw_->medge[k]);
        const Coord& h = mw_->matching.edges[k].second;
        ci_ = h.i;
        cp_ = w_.row(h.p);
        out_ = true;
        return *this;
    }
    // Appends an off-wall path from the current x^- that ends on coordinate c.
    Walker& follow(const std::vector<EdgeId>& edges, const Coord& c) {
        if (out_ && w_.interior(ci_)) throw std::logic_error("path must leave an x^-");
        path_.edges.insert(path_.edges.end(), edges.begin(), edges.end());
        ci_ = c.i;
        cp_ = w_.row(c.p);
        out_ = c.s == Sign::Plus || !w_.interior(c.i);
        return *this;
    }
    int col() const { return ci_; }
    int row() const { return cp_; }
    const Path& path() const { return path_; }

private:
    void push(const std::vector<EdgeId>& seg) {
        if (seg.empty()) throw std::logic_error("missing wall edge");
        path_.edges.insert(path_.edges.end(), seg.begin(), seg.end());
    }
    const MatchedWall* mw_ = nullptr;
    const Wall& w_;
    Path path_;
    int ci_ = 0, cp_ = 0;
    bool out_ = false;
};

}  // namespace eedp::detail
