#include "concord/two_bridge.hpp"

#include <numeric>
#include <stdexcept>

namespace concord {

namespace {

void check_fraction(long p, long q) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("bridge number p must be odd and >= 3");
    if (q < 1 || q >= p) throw std::invalid_argument("q must lie strictly between 0 and p");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct BraidLetter {
    int pos;  // crossing of strands (pos, pos+1), 0-indexed
    int e;    // +1: right strand passes over; -1: left strand passes over
};

CrossingDiagram plat_closure(const std::vector<BraidLetter>& letters) {
    const int L = static_cast<int>(letters.size());
    if (L < 1) throw std::invalid_argument("empty braid word");

    // edge id 4*level + top position; transposition wiring per level
    auto fwd = [&](int level, int p) {
        int c = letters[level].pos;
        if (p == c) return c + 1;
        if (p == c + 1) return c;
        return p;
    };
    auto edge_ending_at = [&](int level, int p) {  // level in [1, L]
        return 4 * (level - 1) + fwd(level - 1, p);
    };

    // orientation walk over the single circuit
    std::vector<int> dir(4 * L, 0);
    int e = 0;
    bool down = true;
    int visited = 0;
    do {
        if (dir[e] != 0) throw std::invalid_argument("plat closure is a link, not a knot");
        dir[e] = down ? 1 : -1;
        ++visited;
        int level = e / 4, p = e % 4;
        if (down) {
            int q = fwd(level, p);
            if (level + 1 < L) {
                e = 4 * (level + 1) + q;
            } else {
                e = edge_ending_at(L, q ^ 1);
                down = false;
            }
        } else {
            if (level > 0) {
                e = edge_ending_at(level, p);
            } else {
                e = p ^ 1;
                down = true;
            }
        }
    } while (!(e == 0 && down));
    if (visited != 4 * L) throw std::invalid_argument("plat closure is a link, not a knot");

    // arcs: half-edges 2e (top part) and 2e+1 (bottom part); the under strand
    // of each crossing stays split, everything else is joined
    UnionFind uf(8 * L);
    for (int ed = 0; ed < 4 * L; ++ed) {
        int level = ed / 4, p = ed % 4, c = letters[level].pos;
        bool under = (letters[level].e == 1 && p == c) || (letters[level].e == -1 && p == c + 1);
        if (!under) uf.unite(2 * ed, 2 * ed + 1);
    }
    for (int level = 1; level < L; ++level)
        for (int p = 0; p < 4; ++p) uf.unite(2 * edge_ending_at(level, p) + 1, 2 * (4 * level + p));
    uf.unite(2 * 0, 2 * 1);
    uf.unite(2 * 2, 2 * 3);
    uf.unite(2 * edge_ending_at(L, 0) + 1, 2 * edge_ending_at(L, 1) + 1);
    uf.unite(2 * edge_ending_at(L, 2) + 1, 2 * edge_ending_at(L, 3) + 1);

    std::vector<int> arc_of(8 * L, 0);
    int arcs = 0;
    for (int h = 0; h < 8 * L; ++h) {
        int r = uf.find(h);
        if (arc_of[r] == 0) arc_of[r] = ++arcs;
        arc_of[h] = arc_of[r];
    }
    if (arcs != L) throw std::logic_error("arc count does not match crossing count");

    CrossingDiagram d;
    d.num_arcs = arcs;
    for (int level = 0; level < L; ++level) {
        int c = letters[level].pos;
        int left = 4 * level + c, right = 4 * level + c + 1;
        int over = letters[level].e == 1 ? right : left;
        int under = letters[level].e == 1 ? left : right;
        Crossing x;
        x.sign = letters[level].e * dir[over] * dir[under];
        x.over = arc_of[2 * over];
        x.under_in = dir[under] == 1 ? arc_of[2 * under] : arc_of[2 * under + 1];
        x.under_out = dir[under] == 1 ? arc_of[2 * under + 1] : arc_of[2 * under];
        d.crossings.push_back(x);
    }
    validate_diagram(d);
    return d;
}

}  // namespace

std::vector<long> positive_continued_fraction(long p, long q) {
    check_fraction(p, q);
    std::vector<long> a;
    long x = p, y = q;
    while (y != 0) {
        a.push_back(x / y);
        long r = x % y;
        x = y;
        y = r;
    }
    if (a.size() % 2 == 0) {
        if (a.back() == 1) {
            a.pop_back();
            a.back() += 1;
        } else {
            a.back() -= 1;
            a.push_back(1);
        }
    }
    return a;
}

Presentation two_bridge_presentation(long p, long q) {
    check_fraction(p, q);
    long qq = q % 2 == 1 ? q : q + p;  // odd representative mod 2p
    Word w;
    for (long i = 1; i < p; ++i) {
        int g = i % 2 == 1 ? 2 : 1;
        long eps = (i * qq / p) % 2 == 0 ? 1 : -1;
        w.push_back(static_cast<int>(eps) * g);
    }
    Word relator{1};
    relator = word_concat(relator, w);
    relator = word_concat(relator, Word{-2});
    relator = word_concat(relator, word_inverse(w));
    Presentation pres{2, {relator}, {1, 1}};
    validate_presentation(pres);
    return pres;
}

CrossingDiagram two_bridge_diagram(long p, long q) {
    std::vector<long> cf = positive_continued_fraction(p, q);
    std::vector<BraidLetter> letters;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        BraidLetter letter;
        letter.pos = i % 2 == 0 ? 1 : 0;  // sigma_2 powers first, then sigma_1^-1
        letter.e = i % 2 == 0 ? 1 : -1;
        for (long r = 0; r < cf[i]; ++r) letters.push_back(letter);
    }
    return plat_closure(letters);
}

KnotRecord two_bridge_knot(long p, long q) {
    KnotRecord rec;
    rec.name = "b(" + std::to_string(p) + "," + std::to_string(q) + ")";
    rec.presentation = two_bridge_presentation(p, q);
    rec.diagram = two_bridge_diagram(p, q);
    return rec;
}

}  // namespace concord
