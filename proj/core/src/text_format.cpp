#include "schurweyl/text_format.hpp"

#include "schurweyl/error.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace schurweyl {

namespace {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    int integer() {
        skip_space();
        int value = 0;
        const char *begin = text_.data() + pos_;
        const char *end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin)
            fail("expected an integer");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<int> integer_list(Cursor &in, char close) {
    std::vector<int> out;
    if (in.consume(close))
        return out;
    do
        out.push_back(in.integer());
    while (in.consume(','));
    in.expect(close);
    return out;
}

} // namespace

YoungDiagram parse_partition(std::string_view text) {
    Cursor in(text);
    if (in.at_end())
        in.fail("empty partition");
    std::vector<int> rows;
    do
        rows.push_back(in.integer());
    while (in.consume(','));
    if (!in.at_end())
        in.fail("trailing characters");
    return YoungDiagram(rows);
}

StandardTableau parse_tableau(std::string_view text) {
    Cursor in(text);
    in.expect('[');
    std::vector<std::vector<int>> rows;
    if (!in.consume(']')) {
        do {
            in.expect('[');
            rows.push_back(integer_list(in, ']'));
        } while (in.consume(','));
        in.expect(']');
    }
    if (!in.at_end())
        in.fail("trailing characters");
    return StandardTableau(rows);
}

Box parse_box(std::string_view text) {
    Cursor in(text);
    in.expect('(');
    Box b;
    b.row = in.integer();
    in.expect(',');
    b.col = in.integer();
    in.expect(')');
    if (!in.at_end())
        in.fail("trailing characters");
    return b;
}

} // namespace schurweyl
