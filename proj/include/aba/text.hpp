#ifndef ABA_TEXT_HPP
#define ABA_TEXT_HPP

#include <stdexcept>
#include <string>

#include "aba/framework.hpp"

namespace aba {

// Line-oriented source format, '#' comments, '.' terminators:
//   assumption <id>.
//   contrary <id> : <id> (, <id>)*.
//   rule <id> <- (<id> (, <id>)*)? .
//   value <id> = <vid>.
//   order <vid> < <vid>.        (vid1 <= vid2)
//   order <vid> ~ <vid>.        (both directions)
// Assumptions without a declared value share one fresh value; the preorder
// is normalized on the way out.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

Framework parse_framework(const std::string& text);
Framework parse_framework_file(const std::string& path);

// Canonical re-parseable form: assumptions, contraries, rules, values, order
// declarations, in that order. serialize(parse(serialize(f))) == serialize(f).
std::string serialize(const Framework& f);

// Name-based structural equality (insertion order and decorations ignored).
bool structurally_equal(const Framework& a, const Framework& b);

// Reads `rule` statements and returns per-rule inclusion flags against f's
// rule list; a rule absent from f is an error.
std::vector<char> parse_rule_subset(const Framework& f, const std::string& text);

}  // namespace aba

#endif
