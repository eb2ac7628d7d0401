#include "resolvent/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "resolvent/error.hpp"

namespace resolvent {

namespace {

class Matcher {
public:
    Matcher(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {}

    std::optional<std::vector<Vertex>> run()
    {
        std::vector<int> colors(2 * n_);
        for (Vertex v = 0; v < n_; ++v) {
            colors[v] = static_cast<int>(a_.degree(v));
            colors[n_ + v] = static_cast<int>(b_.degree(v));
        }
        return search(std::move(colors));
    }

private:
    [[nodiscard]] const Graph& side(std::size_t x) const { return x < n_ ? a_ : b_; }
    [[nodiscard]] std::size_t offset(std::size_t x) const { return x < n_ ? 0 : n_; }

    // Joint refinement over both graphs keeps class ids comparable across sides.
    void refine(std::vector<int>& colors) const
    {
        std::size_t classes = count_classes(colors);
        while (true) {
            std::map<std::vector<int>, int> ids;
            std::vector<std::vector<int>> signature(2 * n_);
            for (std::size_t x = 0; x < 2 * n_; ++x) {
                auto& sig = signature[x];
                sig.push_back(colors[x]);
                auto base = offset(x);
                for (auto w : side(x).neighbors(static_cast<Vertex>(x - base)))
                    sig.push_back(colors[base + w]);
                std::sort(sig.begin() + 1, sig.end());
                ids.emplace(sig, 0);
            }
            int next = 0;
            for (auto& [sig, id] : ids)
                id = next++;
            for (std::size_t x = 0; x < 2 * n_; ++x)
                colors[x] = ids.at(signature[x]);
            auto now = ids.size();
            if (now == classes)
                return;
            classes = now;
        }
    }

    static std::size_t count_classes(const std::vector<int>& colors)
    {
        auto sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    std::optional<std::vector<Vertex>> search(std::vector<int> colors)
    {
        refine(colors);
        int max_color = *std::max_element(colors.begin(), colors.end());
        std::vector<int> count_a(static_cast<std::size_t>(max_color) + 1, 0);
        std::vector<int> count_b(count_a.size(), 0);
        for (std::size_t v = 0; v < n_; ++v) {
            ++count_a[static_cast<std::size_t>(colors[v])];
            ++count_b[static_cast<std::size_t>(colors[n_ + v])];
        }
        if (count_a != count_b)
            return std::nullopt;

        // Smallest non-singleton class, lowest id on ties.
        int target = -1;
        for (std::size_t c = 0; c < count_a.size(); ++c)
            if (count_a[c] > 1 && (target < 0 || count_a[c] < count_a[static_cast<std::size_t>(target)]))
                target = static_cast<int>(c);

        if (target < 0) {
            std::vector<Vertex> perm(n_);
            std::vector<Vertex> by_color(count_a.size());
            for (std::size_t v = 0; v < n_; ++v)
                by_color[static_cast<std::size_t>(colors[n_ + v])] = static_cast<Vertex>(v);
            for (std::size_t v = 0; v < n_; ++v)
                perm[v] = by_color[static_cast<std::size_t>(colors[v])];
            for (auto [u, v] : a_.edges())
                if (!b_.adjacent(perm[u], perm[v]))
                    return std::nullopt;
            return perm;
        }

        std::size_t pivot = 0;
        while (colors[pivot] != target)
            ++pivot;
        for (std::size_t y = n_; y < 2 * n_; ++y) {
            if (colors[y] != target)
                continue;
            auto next = colors;
            next[pivot] = max_color + 1;
            next[y] = max_color + 1;
            if (auto found = search(std::move(next)))
                return found;
        }
        return std::nullopt;
    }

    const Graph& a_;
    const Graph& b_;
    std::size_t n_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    const IsomorphismOptions& options)
{
    auto largest = std::max(a.order(), b.order());
    if (largest > options.max_order)
        throw Error(ErrorCode::too_large, "isomorphism test on order " + std::to_string(largest) +
                                              " exceeds cap " + std::to_string(options.max_order));
    if (a.order() != b.order() || a.size() != b.size())
        return std::nullopt;
    if (a.order() == 0)
        return std::vector<Vertex>{};
    return Matcher(a, b).run();
}

bool is_isomorphic(const Graph& a, const Graph& b, const IsomorphismOptions& options)
{
    return find_isomorphism(a, b, options).has_value();
}

}  // namespace resolvent
