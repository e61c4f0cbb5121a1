#include "aaslab/genvec.hpp"

#include "aaslab/errors.hpp"
#include "aaslab/structure.hpp"

#include <algorithm>
#include <map>

namespace aaslab {

namespace {

    enum class Slot { A, B, C };

    struct Position {
        Slot slot;
        std::size_t index;                   // into a/b or c
        const std::vector<Element>* choices; // candidate list, in search order
        int tail_order;                      // order constraint for C slots, -1 otherwise
    };

    class Searcher {
    public:
        Searcher(const Group& g, const ConjugacyData& classes, const Signature& sig, std::uint64_t budget)
            : g_(g), sig_(sig), budget_(budget)
        {
            const std::size_t n = g.order();
            std::vector<std::size_t> class_size(n);
            for (std::size_t x = 0; x < n; ++x)
                class_size[x] = classes.classes[classes.class_of[x]].size();
            auto by_class_size = [&](Element x, Element y) {
                return class_size[x] != class_size[y] ? class_size[x] > class_size[y] : x < y;
            };

            all_.resize(n);
            for (std::size_t x = 0; x < n; ++x)
                all_[x] = Element(x);
            std::sort(all_.begin(), all_.end(), by_class_size);

            const auto orders = order_set(g);
            for (unsigned m : sig.tail) {
                if (!std::binary_search(orders.begin(), orders.end(), m))
                    throw OrderNotInGroup(m);
                if (of_order_.count(m))
                    continue;
                auto xs = elements_of_order(g, m);
                std::sort(xs.begin(), xs.end(), by_class_size);
                ElementSet mask(n);
                for (Element x : xs)
                    mask.set(x);
                of_order_[m] = std::move(xs);
                order_mask_[m] = std::move(mask);
            }

            const std::size_t s = sig.s();
            // c_1 first (up to conjugacy), then the commutator pairs, then
            // the middle of the tail; c_s is forced by the relation.
            if (s >= 1) {
                for (Element r : classes.representatives)
                    if (g.element_order(r) == sig.tail[0])
                        c1_reps_.push_back(r);
                std::sort(c1_reps_.begin(), c1_reps_.end(), by_class_size);
                positions_.push_back({Slot::C, 0, &c1_reps_, int(sig.tail[0])});
            }
            for (std::size_t i = 0; i < sig.h; ++i) {
                const bool fix_a1 = s == 0 && i == 0;
                if (fix_a1)
                    positions_.push_back({Slot::A, i, &classes.representatives, -1});
                else
                    positions_.push_back({Slot::A, i, &all_, -1});
                positions_.push_back({Slot::B, i, &all_, -1});
            }
            for (std::size_t j = 1; j + 1 < s; ++j)
                positions_.push_back({Slot::C, j, &of_order_[sig.tail[j]], int(sig.tail[j])});
            forced_ = s >= 2;

            vec_.a.assign(sig.h, kIdentity);
            vec_.b.assign(sig.h, kIdentity);
            vec_.c.assign(s, kIdentity);
        }

        SearchResult run()
        {
            SearchResult result;
            if (positions_.empty() && !forced_) {
                // (0; -) or (0; m) with nothing to choose
                result.status = leaf() ? SearchStatus::Found : SearchStatus::Exhausted;
                if (result.status == SearchStatus::Found)
                    result.vector = vec_;
                return result;
            }
            // one slot per depth, reserved so references into it stay valid
            std::vector<Subgroup> closures;
            closures.reserve(positions_.size() + 1);
            closures.push_back(trivial_subgroup(g_));
            const bool found = descend(0, closures);
            result.nodes = nodes_;
            if (found) {
                result.status = SearchStatus::Found;
                result.vector = vec_;
            } else {
                result.status = aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
            }
            return result;
        }

    private:
        // Product of the relation with the current assignment, c_s excluded.
        Element partial_product() const
        {
            Element p = kIdentity;
            for (std::size_t i = 0; i < sig_.h; ++i)
                p = g_.mul(p, g_.commutator(vec_.a[i], vec_.b[i]));
            const std::size_t upto = forced_ ? sig_.s() - 1 : sig_.s();
            for (std::size_t j = 0; j < upto; ++j)
                p = g_.mul(p, vec_.c[j]);
            return p;
        }

        bool leaf()
        {
            const Element p = partial_product();
            if (forced_) {
                const Element last = g_.inv(p);
                if (g_.element_order(last) != sig_.tail.back())
                    return false;
                vec_.c.back() = last;
                return true;
            }
            if (p != kIdentity)
                return false;
            return closure_of(g_, vec_.entries()).is_whole(g_);
        }

        // True when every remaining free position draws from tail orders
        // whose elements all lie in h; then generation is out of reach.
        bool trapped(std::size_t depth, const Subgroup& h) const
        {
            for (std::size_t k = depth; k < positions_.size(); ++k) {
                const auto& pos = positions_[k];
                if (pos.tail_order < 0)
                    return false;
                if (!order_mask_.at(unsigned(pos.tail_order)).is_subset_of(h.membership))
                    return false;
            }
            return true;
        }

        bool descend(std::size_t depth, std::vector<Subgroup>& closures)
        {
            if (depth == positions_.size()) {
                // c_s is a product of the free entries, so it adds nothing to the closure
                if (forced_ && !closures.back().is_whole(g_))
                    return false;
                return leaf();
            }
            const Position& pos = positions_[depth];
            const Subgroup& current = closures.back();
            for (Element x : *pos.choices) {
                if (nodes_ >= budget_) {
                    aborted_ = true;
                    return false;
                }
                ++nodes_;
                assign(pos, x);
                const bool grows = !current.contains(x);
                if (grows)
                    closures.push_back(extend_subgroup(g_, current, x));
                const Subgroup& next = closures.back();
                const bool dead = !next.is_whole(g_) && trapped(depth + 1, next);
                const bool hit = !dead && descend(depth + 1, closures);
                if (grows)
                    closures.pop_back();
                if (hit)
                    return true;
                if (aborted_)
                    return false;
            }
            return false;
        }

        void assign(const Position& pos, Element x)
        {
            switch (pos.slot) {
            case Slot::A: vec_.a[pos.index] = x; break;
            case Slot::B: vec_.b[pos.index] = x; break;
            case Slot::C: vec_.c[pos.index] = x; break;
            }
        }

        const Group& g_;
        const Signature& sig_;
        std::uint64_t budget_;
        std::vector<Element> all_;
        std::vector<Element> c1_reps_;
        std::map<unsigned, std::vector<Element>> of_order_;
        std::map<unsigned, ElementSet> order_mask_;
        std::vector<Position> positions_;
        bool forced_ = false;
        GeneratingVector vec_;
        std::uint64_t nodes_ = 0;
        bool aborted_ = false;
    };

} // namespace

SearchResult search(const Group& g, const ConjugacyData& classes, const Signature& sig, std::uint64_t node_budget)
{
    return Searcher(g, classes, sig, node_budget).run();
}

SearchResult search(const Group& g, const Signature& sig, std::uint64_t node_budget)
{
    return search(g, conjugacy_classes(g), sig, node_budget);
}

} // namespace aaslab
