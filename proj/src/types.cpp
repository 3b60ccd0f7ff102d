#include "ccount/types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ccount {

namespace {

bool is_atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

class TypeParser {
public:
    explicit TypeParser(std::string_view text) : text_(text) {}

    CatType parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty type");
        CatType t = expression();
        skip_space();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')') fail("unbalanced ')'");
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return t;
    }

private:
    // expression := operand (slash operand)*, left-associative.
    CatType expression() {
        CatType left = operand();
        for (;;) {
            skip_space();
            if (pos_ == text_.size()) break;
            char c = text_[pos_];
            if (c != '/' && c != '\\') break;
            ++pos_;
            Slash s = c == '/' ? Slash::Rightward : Slash::Leftward;
            CatType right = operand();
            left = CatType::fraction(std::move(left), s, std::move(right));
        }
        return left;
    }

    CatType operand() {
        skip_space();
        if (pos_ == text_.size()) fail("missing operand at end of input");
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_++;
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ')') fail("empty parentheses");
            CatType inner = expression();
            skip_space();
            if (pos_ == text_.size() || text_[pos_] != ')') {
                throw ParseError("unbalanced '(' opened here", open);
            }
            ++pos_;
            return inner;
        }
        if (c == '/' || c == '\\' || c == ')') fail("missing operand");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
        if (pos_ == start) fail(std::string("illegal character '") + c + "'");
        std::string name(text_.substr(start, pos_ - start));
        if (!std::isalpha(static_cast<unsigned char>(name.front()))) {
            throw ParseError("atom must start with a letter: '" + name + "'", start);
        }
        return CatType::basic(BasicType(std::move(name)));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void format_into(std::string& out, const CatType& t) {
    if (t.is_basic()) {
        out += t.atom().name();
        return;
    }
    // Left-associative: the result never needs parentheses, a complex
    // argument always does.
    format_into(out, t.result());
    out += slash_char(t.slash());
    CatType arg = t.argument();
    if (arg.is_basic()) {
        out += arg.atom().name();
    } else {
        out += '(';
        format_into(out, arg);
        out += ')';
    }
}

void collect_basics(const CatType& t, std::set<BasicType>& out) {
    if (t.is_basic()) {
        out.insert(t.atom());
    } else {
        collect_basics(t.result(), out);
        collect_basics(t.argument(), out);
    }
}

}  // namespace

BasicType::BasicType(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) throw std::invalid_argument("invalid basic type name '" + name_ + "'");
}

bool BasicType::valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    for (char c : name) {
        if (!is_atom_char(c)) return false;
    }
    return true;
}

CatType CatType::basic(BasicType b) {
    auto n = std::make_shared<Node>();
    n->hash = mix(0x51ed270b27a1ce31ULL, std::hash<std::string>{}(b.name()));
    n->atom = std::move(b);
    return CatType(std::move(n));
}

CatType CatType::fraction(CatType result, Slash slash, CatType argument) {
    auto n = std::make_shared<Node>();
    n->slash = slash;
    n->depth = 1 + std::max(result.depth(), argument.depth());
    std::size_t h = mix(slash == Slash::Rightward ? 0x2f : 0x5c, result.hash());
    n->hash = mix(h, argument.hash());
    n->result = std::move(result.node_);
    n->argument = std::move(argument.node_);
    return CatType(std::move(n));
}

const BasicType& CatType::atom() const {
    if (!is_basic()) throw std::logic_error("atom() on a fraction type");
    return *node_->atom;
}

Slash CatType::slash() const {
    if (is_basic()) throw std::logic_error("slash() on a basic type");
    return node_->slash;
}

CatType CatType::result() const {
    if (is_basic()) throw std::logic_error("result() on a basic type");
    return CatType(node_->result);
}

CatType CatType::argument() const {
    if (is_basic()) throw std::logic_error("argument() on a basic type");
    return CatType(node_->argument);
}

bool CatType::equal(const Node* a, const Node* b) noexcept {
    if (a == b) return true;
    if (a->hash != b->hash) return false;
    if (a->result == nullptr || b->result == nullptr) {
        return a->result == b->result && *a->atom == *b->atom;
    }
    return a->slash == b->slash && equal(a->result.get(), b->result.get()) &&
           equal(a->argument.get(), b->argument.get());
}

bool operator==(const CatType& a, const CatType& b) noexcept {
    return CatType::equal(a.node_.get(), b.node_.get());
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at column " + std::to_string(position + 1) + ")"),
      position_(position) {}

CatType parse_type(std::string_view text) { return TypeParser(text).parse(); }

TypeSequence parse_sequence(std::string_view text) {
    TypeSequence out;
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) out.push_back(parse_type(tok));
    return out;
}

std::string format_type(const CatType& t) {
    std::string out;
    format_into(out, t);
    return out;
}

std::string format_sequence(const TypeSequence& s) {
    std::string out;
    for (const auto& t : s) {
        if (!out.empty()) out += ' ';
        out += format_type(t);
    }
    return out;
}

bool textual_less(const CatType& a, const CatType& b) { return format_type(a) < format_type(b); }

CatType flip_slashes(const CatType& t) {
    if (t.is_basic()) return t;
    return CatType::fraction(flip_slashes(t.result()), opposite(t.slash()), flip_slashes(t.argument()));
}

int count(const BasicType& x, const CatType& t) {
    if (t.is_basic()) return t.atom() == x ? 1 : 0;
    return count(x, t.result()) - count(x, t.argument());
}

int count_seq(const BasicType& x, const TypeSequence& s) {
    int total = 0;
    for (const auto& t : s) total += count(x, t);
    return total;
}

std::set<BasicType> basics_of(const CatType& t) {
    std::set<BasicType> out;
    collect_basics(t, out);
    return out;
}

std::set<BasicType> basics_of(const TypeSequence& s) {
    std::set<BasicType> out;
    for (const auto& t : s) collect_basics(t, out);
    return out;
}

bool count_invariance_holds(const TypeSequence& s, const BasicType& goal) {
    auto support = basics_of(s);
    support.insert(goal);
    for (const auto& x : support) {
        if (count_seq(x, s) != (x == goal ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace ccount
