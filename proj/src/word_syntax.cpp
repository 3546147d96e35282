#include "ptower/word_syntax.hpp"

#include <cctype>
#include <limits>

#include "ptower/error.hpp"

namespace ptower::cli {

using magnus::Letter;
using magnus::Word;

namespace {

/* Parsed before the rank is known; generators are plain letter lists. */
using Raw = std::vector<Letter>;

Raw raw_inverse(Raw const & w)
{
    Raw out(w.rbegin(), w.rend());
    for (auto & l : out)
        l.exp = -l.exp;
    return out;
}

Raw raw_concat(Raw a, Raw const & b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Raw raw_commutator(Raw const & u, Raw const & v)
{
    return raw_concat(raw_concat(raw_concat(raw_inverse(u), raw_inverse(v)), u), v);
}

Raw raw_pow(Raw const & w, std::int64_t e)
{
    Raw base = e < 0 ? raw_inverse(w) : w;
    std::uint64_t k = e < 0 ? std::uint64_t(-e) : std::uint64_t(e);
    if (base.size() == 1) {
        Letter l = base.front();
        l.exp *= std::int64_t(k);
        return k == 0 ? Raw{} : Raw{l};
    }
    if (k > 100000)
        fail(ErrorKind::InvalidArgument, "exponent too large for a compound word");
    Raw out;
    for (std::uint64_t i = 0; i < k; ++i)
        out.insert(out.end(), base.begin(), base.end());
    return out;
}

class Parser
{
    std::string_view text_;
    std::size_t pos_ = 0;
    bool lines_separate_;
    int depth_ = 0;
    unsigned max_gen_ = 0;

    public:

    Parser(std::string_view text, bool lines_separate)
        : text_(text), lines_separate_(lines_separate)
    {
    }

    unsigned max_generator() const { return max_gen_; }

    [[noreturn]] void error(std::string const & what) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorKind::SyntaxError,
             "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end()) {
            char ch = text_[pos_];
            if (ch == '#') {
                while (!at_end() && text_[pos_] != '\n')
                    ++pos_;
            } else if (ch == '\n' && lines_separate_ && depth_ == 0) {
                return;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    bool at_separator()
    {
        skip_space();
        char ch = peek();
        return ch == ';' || (ch == '\n' && lines_separate_ && depth_ == 0);
    }

    void consume_separator() { ++pos_; }

    std::int64_t integer()
    {
        skip_space();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            error("expected an integer exponent");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            int digit = peek() - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10)
                error("exponent out of range");
            v = v * 10 + digit;
            ++pos_;
        }
        return neg ? -v : v;
    }

    Raw primary()
    {
        skip_space();
        char ch = peek();
        if (ch == 'x' || ch == 'y') {
            ++pos_;
            unsigned gen = ch == 'x' ? 1 : 2;
            if (ch == 'x' && std::isdigit(static_cast<unsigned char>(peek()))) {
                std::size_t start = pos_;
                unsigned long idx = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) {
                    idx = idx * 10 + unsigned(peek() - '0');
                    if (idx > 64) {
                        pos_ = start;
                        error("generator index out of range");
                    }
                    ++pos_;
                }
                if (idx == 0) {
                    pos_ = start;
                    error("generators are numbered from 1");
                }
                gen = unsigned(idx);
            }
            max_gen_ = std::max(max_gen_, gen);
            return Raw{{gen, 1}};
        }
        if (ch == '1') {
            ++pos_;
            return Raw{};
        }
        if (ch == '(') {
            ++pos_;
            ++depth_;
            Raw inner = word();
            skip_space();
            if (peek() != ')')
                error("expected ')'");
            ++pos_;
            --depth_;
            return inner;
        }
        if (ch == '[') {
            ++pos_;
            ++depth_;
            Raw acc = word();
            std::size_t parts = 1;
            skip_space();
            while (peek() == ',') {
                ++pos_;
                acc = raw_commutator(acc, word());
                ++parts;
                skip_space();
            }
            if (peek() != ']')
                error("expected ',' or ']'");
            if (parts < 2)
                error("a commutator needs at least two entries");
            ++pos_;
            --depth_;
            return acc;
        }
        if (at_end())
            error("unexpected end of input");
        error(std::string("unexpected character '") + ch + "'");
    }

    Raw factor()
    {
        Raw base = primary();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            return raw_pow(base, integer());
        }
        return base;
    }

    bool starts_primary()
    {
        skip_space();
        char ch = peek();
        return ch == 'x' || ch == 'y' || ch == '1' || ch == '(' || ch == '[';
    }

    Raw word()
    {
        Raw out;
        while (starts_primary())
            out = raw_concat(std::move(out), factor());
        return out;
    }
};

} // namespace

Word parse_word(std::string_view text, unsigned min_rank)
{
    Parser parser(text, false);
    Raw raw = parser.word();
    parser.skip_space();
    if (!parser.at_end())
        parser.error(std::string("unexpected character '") + parser.peek() + "'");
    return Word(std::max(min_rank, parser.max_generator()), std::move(raw));
}

std::vector<Word> parse_relations(std::string_view text, unsigned min_rank)
{
    Parser parser(text, true);
    std::vector<std::pair<Raw, bool>> raws; /* (letters, had content) */
    for (;;) {
        bool content = parser.starts_primary();
        Raw raw = parser.word();
        if (content)
            raws.emplace_back(std::move(raw), true);
        if (parser.at_end())
            break;
        if (!parser.at_separator())
            parser.error(std::string("unexpected character '") + parser.peek() + "'");
        parser.consume_separator();
    }
    unsigned rank = std::max(min_rank, parser.max_generator());
    std::vector<Word> out;
    for (auto & [raw, content] : raws)
        out.emplace_back(rank, std::move(raw));
    return out;
}

std::string unparse(Word const & w)
{
    if (w.is_identity())
        return "1";
    std::string out;
    for (auto const & l : w.letters()) {
        if (!out.empty())
            out += ' ';
        if (w.rank() == 2)
            out += l.gen == 1 ? "x" : "y";
        else
            out += "x" + std::to_string(l.gen);
        if (l.exp != 1)
            out += "^" + std::to_string(l.exp);
    }
    return out;
}

} // namespace ptower::cli
