#include <gysin/errors.hpp>
#include <gysin/poly_parse.hpp>

#include <cctype>
#include <limits>

namespace gysin {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParseOptions &options) : text_(text), opt_(options) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, pos_); }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string digits()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_uint()
    {
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.size() > 6) {
            pos_ = at;
            fail("number too large");
        }
        return std::stoi(d);
    }

    std::string identifier()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::vector<int> index_list()
    {
        expect('[');
        std::vector<int> out{small_uint()};
        while (accept(','))
            out.push_back(small_uint());
        expect(']');
        return out;
    }

    Polynomial expr()
    {
        skip();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        if (accept('-'))
            return -factor();
        Polynomial base = primary();
        if (accept('^')) {
            const std::size_t at = pos_;
            const int e = small_uint();
            if (e > static_cast<int>(kMaxExponent)) {
                pos_ = at;
                fail("exponent too large");
            }
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = digits();
            if (accept('/')) {
                const std::size_t at = pos_;
                const std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) {
                    pos_ = at;
                    fail("zero denominator");
                }
                lit += "/" + den;
            }
            return Polynomial(parse_rational(lit));
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return named();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Polynomial named()
    {
        const std::size_t start = pos_;
        const std::string name = identifier();
        skip();
        if (pos_ >= text_.size() || text_[pos_] != '[') {
            pos_ = start;
            fail("unknown symbol '" + name + "'");
        }
        const std::vector<int> idx = index_list();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            const std::size_t arg_start = pos_;
            int depth = 0;
            while (pos_ < text_.size() && (text_[pos_] != ')' || depth > 0)) {
                depth += text_[pos_] == '[' ? 1 : text_[pos_] == ']' ? -1 : 0;
                ++pos_;
            }
            if (pos_ >= text_.size())
                fail("expected ')'");
            std::string arg(text_.substr(arg_start, pos_ - arg_start));
            std::erase_if(arg, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
            ++pos_;
            if (!opt_.call) {
                pos_ = start;
                fail("function calls are not allowed here");
            }
            return opt_.call(name, idx, arg, start);
        }

        VarId v;
        const auto arity = idx.size();
        for (int i : idx)
            if (i < 1) {
                pos_ = start;
                fail("indices start at 1");
            }
        if (name == "z" && arity == 1)
            v = z_var(opt_.default_z_group, idx[0]);
        else if (name == "z" && arity == 2)
            v = z_var(idx[0], idx[1]);
        else if (name == "t" && arity == 1)
            v = t_var(idx[0]);
        else if (name == "u" && arity == 1)
            v = u_var(idx[0]);
        else if (name == "v" && arity == 2)
            v = v_var(idx[0], idx[1]);
        else {
            pos_ = start;
            fail("unknown variable '" + name + "' with " + std::to_string(arity) + " indices");
        }
        if (opt_.check_variable)
            opt_.check_variable(v, start);
        return Polynomial::variable(v);
    }

    std::string_view text_;
    const ParseOptions &opt_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const ParseOptions &options)
{
    return Parser(text, options).parse();
}

} // namespace gysin
