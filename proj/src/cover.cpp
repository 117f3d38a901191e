#include "concord/cover.hpp"

#include <cstdlib>
#include <stdexcept>

namespace concord {

CoverPresentation cyclic_cover_presentation(const Presentation& base, long n) {
    if (n < 1) throw std::invalid_argument("cover degree must be positive");
    Presentation b = base;
    if (b.eta.empty()) compute_degree_map(b);
    validate_presentation(b);

    int bg = 0;
    for (int j = 1; j <= b.num_generators; ++j)
        if (b.eta[j - 1] == 1) {
            bg = j;
            break;
        }
    if (bg == 0) throw std::invalid_argument("no generator of degree one for the transversal");

    CoverPresentation cov;
    cov.n = n;
    cov.base_generator = bg;
    cov.base_eta = b.eta;
    cov.index.assign(static_cast<std::size_t>(b.num_generators), std::vector<int>(n, 0));

    // s_{b,c} = x_b^c x_b x_b^-(c+1) is trivial for c < n-1; s_{b,n-1} = x_b^n.
    int next = 0;
    for (int j = 1; j <= b.num_generators; ++j)
        for (long c = 0; c < n; ++c) {
            if (j == bg && c < n - 1) continue;
            cov.index[j - 1][c] = ++next;
            cov.labels.emplace_back(j, c);
            long cc = (c + b.eta[j - 1]) % n;
            if (cc < 0) cc += n;
            cov.pres.eta.push_back((c + b.eta[j - 1] - cc) / n);
        }
    cov.pres.num_generators = next;
    cov.meridian = cov.index[bg - 1][n - 1];

    for (const auto& r : b.relators)
        for (long c = 0; c < n; ++c)
            cov.pres.relators.push_back(rewrite_in_cover(cov, r, c));

    validate_presentation(cov.pres);
    return cov;
}

Word rewrite_in_cover(const CoverPresentation& cov, const Word& base_word, long start_coset) {
    Word out;
    long u = start_coset % cov.n;
    if (u < 0) u += cov.n;
    for (int letter : base_word) {
        std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
        if (j >= cov.base_eta.size()) throw std::invalid_argument("letter out of range");
        long e = cov.base_eta[j];
        if (letter > 0) {
            int g = cov.index[j][u];
            if (g) out.push_back(g);
            u = ((u + e) % cov.n + cov.n) % cov.n;
        } else {
            u = ((u - e) % cov.n + cov.n) % cov.n;
            int g = cov.index[j][u];
            if (g) out.push_back(-g);
        }
    }
    long end = start_coset % cov.n;
    if (end < 0) end += cov.n;
    if (u != end) throw std::invalid_argument("word does not return to its coset");
    return reduce_word(std::move(out));
}

}  // namespace concord
