#include "klein/arith/scalar_text.hpp"

#include <cctype>

namespace klein {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message)
{
}

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

    QuadRat parse()
    {
        skip_ws();
        if (at_end()) fail("empty scalar");
        QuadRat total;
        bool negative = consume('-');
        total = term();
        if (negative) total = -total;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
            ++pos_;
            QuadRat t = term();
            if (c == '+') total += t; else total -= t;
        }
        return total;
    }

private:
    QuadRat term()
    {
        skip_ws();
        if (at_end()) fail("expected a term");
        if (peek_nu()) {
            pos_ += 2;
            reject_product();
            return QuadRat::nu();
        }
        Rat r = rational();
        skip_ws();
        if (consume('*')) {
            skip_ws();
            if (!peek_nu()) fail("expected 'nu' after '*'");
            pos_ += 2;
            reject_product();
            return QuadRat(0, r);
        }
        return QuadRat(r);
    }

    Rat rational()
    {
        Int num = digits();
        skip_ws();
        if (consume('/')) {
            skip_ws();
            std::size_t at = pos_;
            Int den = digits();
            if (den == 0) fail_at(at, "zero denominator");
            return make_rat(num, den);
        }
        return Rat(num);
    }

    Int digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number or 'nu'");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    void reject_product()
    {
        skip_ws();
        if (!at_end() && text_[pos_] == '*') fail("products of nu are not part of the grammar");
        if (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
            fail("unexpected character after 'nu'");
    }

    bool peek_nu() const { return text_.substr(pos_, 2) == "nu"; }
    bool at_end() const { return pos_ >= text_.size(); }
    bool consume(char c)
    {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(base_ + at, msg); }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::string nu_term(const Rat& c)
{
    if (c == 1) return "nu";
    if (c == -1) return "-nu";
    return to_string(c) + "*nu";
}

}  // namespace

QuadRat parse_scalar(std::string_view text) { return ScalarParser(text, 0).parse(); }

std::vector<QuadRat> parse_scalar_list(std::string_view text)
{
    std::vector<QuadRat> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(ScalarParser(text.substr(start, end - start), start).parse());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_scalar(const QuadRat& x)
{
    if (x.b() == 0) return to_string(x.a());
    if (x.a() == 0) return nu_term(x.b());
    std::string out = to_string(x.a());
    if (x.b() > 0) {
        out += '+';
        out += nu_term(x.b());
    } else {
        out += '-';
        out += nu_term(-x.b());
    }
    return out;
}

}  // namespace klein
