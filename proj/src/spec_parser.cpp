#include "aaslab/spec_parser.hpp"

#include "aaslab/errors.hpp"

#include <cctype>
#include <limits>

namespace aaslab::cli {

namespace {

    // Character cursor over the text with whitespace skipped; positions refer
    // to the original string.
    class Cursor {
    public:
        explicit Cursor(std::string_view text) : text_(text) { skip(); }

        bool done() const { return pos_ >= text_.size(); }
        std::size_t pos() const { return pos_; }
        char peek() const { return done() ? '\0' : text_[pos_]; }

        bool accept(std::string_view word)
        {
            std::size_t p = pos_;
            for (char ch : word) {
                while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
                    ++p;
                if (p >= text_.size() || text_[p] != ch)
                    return false;
                ++p;
            }
            pos_ = p;
            skip();
            return true;
        }

        void expect(std::string_view word)
        {
            if (!accept(word))
                fail("expected '" + std::string(word) + "'");
        }

        std::uint64_t number()
        {
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail(peek() == '-' ? "negative numbers are not allowed" : "expected a number");
            std::uint64_t value = 0;
            const std::size_t start = pos_;
            while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const unsigned digit = unsigned(text_[pos_] - '0');
                if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
                    throw ParseError("number too large", start);
                value = value * 10 + digit;
                ++pos_;
            }
            skip();
            return value;
        }

        [[noreturn]] void fail(const std::string& why) const
        {
            std::string near = done() ? "end of input" : "'" + std::string(1, peek()) + "'";
            throw ParseError(why + ", found " + near, pos_);
        }

    private:
        void skip()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        std::string_view text_;
        std::size_t pos_ = 0;
    };

    GroupSpec::Cycles permutation(Cursor& in)
    {
        GroupSpec::Cycles cycles;
        if (in.accept("()"))
            return cycles;
        if (in.peek() != '(')
            in.fail("expected a cycle");
        while (in.accept("(")) {
            std::vector<unsigned> cycle{unsigned(in.number())};
            while (in.accept(","))
                cycle.push_back(unsigned(in.number()));
            in.expect(")");
            cycles.push_back(std::move(cycle));
        }
        return cycles;
    }

    GroupSpec factor(Cursor& in)
    {
        const std::size_t start = in.pos();
        auto one = [&](auto make) {
            const auto n = in.number();
            return make(unsigned(n));
        };
        GroupSpec spec;
        // longer keywords first so "SL" is not read as "S"
        if (in.accept("PSL(")) {
            in.expect("2");
            in.expect(",");
            spec = GroupSpec::psl2(unsigned(in.number()));
            in.expect(")");
        } else if (in.accept("SL(")) {
            in.expect("2");
            in.expect(",");
            spec = GroupSpec::sl2(unsigned(in.number()));
            in.expect(")");
        } else if (in.accept("Heis(")) {
            spec = GroupSpec::heisenberg(unsigned(in.number()));
            in.expect(")");
        } else if (in.accept("MC(")) {
            unsigned v[4];
            for (int i = 0; i < 4; ++i) {
                if (i)
                    in.expect(",");
                v[i] = unsigned(in.number());
            }
            in.expect(")");
            spec = GroupSpec::metacyclic(v[0], v[1], v[2], v[3]);
        } else if (in.accept("EA(")) {
            const auto p = unsigned(in.number());
            in.expect(",");
            const auto k = unsigned(in.number());
            in.expect(")");
            spec = GroupSpec::elementary_abelian(p, k);
        } else if (in.accept("Perm[")) {
            std::vector<GroupSpec::Cycles> gens{permutation(in)};
            while (in.accept(";"))
                gens.push_back(permutation(in));
            in.expect("]");
            spec = GroupSpec::permutations(std::move(gens));
        } else if (in.accept("A")) {
            spec = one(GroupSpec::alternating);
        } else if (in.accept("S")) {
            spec = one(GroupSpec::symmetric);
        } else if (in.accept("C")) {
            spec = one(GroupSpec::cyclic);
        } else if (in.accept("D")) {
            spec = one(GroupSpec::dihedral);
        } else if (in.accept("Q")) {
            spec = one(GroupSpec::quaternion);
        } else {
            in.fail("expected a group (A, S, C, D, Q, SL, PSL, Heis, MC, EA or Perm)");
        }
        try {
            spec.validate();
        } catch (const InvalidSpec& e) {
            throw ParseError(e.what(), start);
        }
        return spec;
    }

} // namespace

GroupSpec parse_group_spec(std::string_view text)
{
    Cursor in(text);
    if (in.done())
        in.fail("empty group spec");
    std::vector<GroupSpec> factors{factor(in)};
    while (in.accept("x"))
        factors.push_back(factor(in));
    if (!in.done())
        in.fail("unexpected trailing text");
    if (factors.size() == 1)
        return factors.front();
    return GroupSpec::product(std::move(factors));
}

Signature parse_signature(std::string_view text)
{
    Cursor in(text);
    const bool parenthesized = in.accept("(");
    if (in.peek() == '-')
        in.fail("orbit genus must be non-negative");
    const auto h = in.number();
    in.expect(";");
    std::vector<unsigned> tail;
    if (!in.accept("-")) {
        do {
            const std::size_t at = in.pos();
            const auto m = in.number();
            if (m < 2)
                throw ParseError("branch orders must be at least 2", at);
            tail.push_back(unsigned(m));
        } while (in.accept(","));
    }
    if (parenthesized)
        in.expect(")");
    if (!in.done())
        in.fail("unexpected trailing text");
    return Signature(unsigned(h), std::move(tail));
}

} // namespace aaslab::cli
