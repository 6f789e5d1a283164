#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ted {

// Ordered labeled tree. Child order is significant and survives a
// serialize/parse round trip.
struct Tree {
    std::string label;
    std::vector<Tree> children;

    Tree() = default;
    explicit Tree(std::string lab) : label(std::move(lab)) {}
    Tree(std::string lab, std::vector<Tree> kids)
        : label(std::move(lab)), children(std::move(kids)) {}

    bool operator==(const Tree& other) const;
    std::size_t node_count() const;
};

// Raised by the text-format readers. `offset` is the byte position of the
// first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Bracket encoding: {A{B}{C}} is a root labeled A with children B, C in
// order. `\{`, `\}` and `\\` escape literal braces and backslashes inside
// labels. Empty labels are rejected.
Tree parse_bracket(const std::string& text);
std::string serialize_bracket(const Tree& t);

// Element structure of a standalone XML document: labels are element names,
// attributes and text content are dropped, document order is preserved.
Tree ingest_xml(const std::string& text);

}  // namespace ted
