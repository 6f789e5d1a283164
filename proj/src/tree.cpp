#include "ted/tree.hpp"

#include <cctype>
#include <utility>

namespace ted {

bool Tree::operator==(const Tree& other) const {
    if (label != other.label || children.size() != other.children.size())
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!(children[i] == other.children[i])) return false;
    return true;
}

std::size_t Tree::node_count() const {
    std::size_t n = 1;
    for (const Tree& c : children) n += c.node_count();
    return n;
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

[[noreturn]] void fail(const std::string& msg, std::size_t off) {
    throw ParseError(msg, off);
}

}  // namespace

Tree parse_bracket(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    if (n == 0) fail("empty input", 0);

    // Explicit stack instead of recursion; inputs may be arbitrarily deep.
    std::vector<Tree> stack;
    Tree root;
    bool have_root = false;

    while (i < n) {
        char c = text[i];
        if (c == '{') {
            if (have_root) fail("trailing garbage after tree", i);
            ++i;
            std::string label;
            while (i < n && text[i] != '{' && text[i] != '}') {
                if (text[i] == '\\') {
                    if (i + 1 >= n) fail("dangling escape", i);
                    char e = text[i + 1];
                    if (e != '{' && e != '}' && e != '\\')
                        fail("invalid escape sequence", i);
                    label.push_back(e);
                    i += 2;
                } else {
                    label.push_back(text[i]);
                    ++i;
                }
            }
            if (label.empty()) fail("empty label", i);
            stack.emplace_back(std::move(label));
        } else if (c == '}') {
            if (stack.empty()) fail("unbalanced '}'", i);
            Tree done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty()) {
                root = std::move(done);
                have_root = true;
            } else {
                stack.back().children.push_back(std::move(done));
            }
            ++i;
        } else {
            fail(have_root ? "trailing garbage after tree"
                           : "expected '{'",
                 i);
        }
    }
    if (!stack.empty()) fail("unbalanced '{'", n);
    if (!have_root) fail("no tree in input", 0);
    return root;
}

namespace {

void escape_label_into(const std::string& label, std::string& out) {
    for (char c : label) {
        if (c == '{' || c == '}' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
}

}  // namespace

std::string serialize_bracket(const Tree& t) {
    std::string out;
    // (node, next child index) pairs
    std::vector<std::pair<const Tree*, std::size_t>> stack;
    stack.emplace_back(&t, 0);
    out.push_back('{');
    escape_label_into(t.label, out);
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->children.size()) {
            const Tree* child = &node->children[next];
            ++next;
            out.push_back('{');
            escape_label_into(child->label, out);
            stack.emplace_back(child, 0);
        } else {
            out.push_back('}');
            stack.pop_back();
        }
    }
    return out;
}

namespace {

// Minimal element-structure XML reader. Understands start/end/empty tags,
// comments, processing instructions, DOCTYPE and CDATA; attribute values and
// character data are skipped.
class XmlReader {
public:
    explicit XmlReader(const std::string& text) : s_(text) {}

    Tree read_document() {
        skip_misc();
        if (pos_ >= s_.size() || s_[pos_] != '<')
            fail("expected root element", pos_);
        Tree root = read_element();
        skip_misc();
        if (pos_ < s_.size()) fail("content after root element", pos_);
        return root;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    bool starts_with(const char* prefix) const {
        return s_.compare(pos_, std::char_traits<char>::length(prefix),
                          prefix) == 0;
    }

    void skip_until(const char* terminator, const char* what) {
        std::size_t at = s_.find(terminator, pos_);
        if (at == std::string::npos) fail(std::string("unterminated ") + what, pos_);
        pos_ = at + std::char_traits<char>::length(terminator);
    }

    void skip_misc() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            } else if (starts_with("<?")) {
                skip_until("?>", "processing instruction");
            } else if (starts_with("<!--")) {
                skip_until("-->", "comment");
            } else if (starts_with("<!DOCTYPE")) {
                // No internal-subset support; good enough for data documents.
                skip_until(">", "DOCTYPE");
            } else {
                return;
            }
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '-' || c == '.' || c == ':';
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
        if (pos_ == start) fail("expected element name", pos_);
        return s_.substr(start, pos_ - start);
    }

    // Positioned on '<' of a start tag; consumes the whole element.
    Tree read_element() {
        ++pos_;  // '<'
        Tree node(read_name());
        // Attributes: skip to '>' or '/>' honoring quotes.
        for (;;) {
            if (pos_ >= s_.size()) fail("unterminated start tag", pos_);
            char c = s_[pos_];
            if (c == '"' || c == '\'') {
                std::size_t close = s_.find(c, pos_ + 1);
                if (close == std::string::npos)
                    fail("unterminated attribute value", pos_);
                pos_ = close + 1;
            } else if (c == '/') {
                if (pos_ + 1 >= s_.size() || s_[pos_ + 1] != '>')
                    fail("malformed empty-element tag", pos_);
                pos_ += 2;
                return node;
            } else if (c == '>') {
                ++pos_;
                break;
            } else {
                ++pos_;
            }
        }
        // Content.
        for (;;) {
            if (pos_ >= s_.size()) fail("missing end tag for " + node.label, pos_);
            if (s_[pos_] == '<') {
                if (starts_with("</")) {
                    std::size_t tag_at = pos_;
                    pos_ += 2;
                    std::string name = read_name();
                    while (pos_ < s_.size() &&
                           std::isspace(static_cast<unsigned char>(s_[pos_])))
                        ++pos_;
                    if (pos_ >= s_.size() || s_[pos_] != '>')
                        fail("malformed end tag", pos_);
                    ++pos_;
                    if (name != node.label)
                        fail("mismatched end tag </" + name + "> for <" +
                                 node.label + ">",
                             tag_at);
                    return node;
                } else if (starts_with("<!--")) {
                    skip_until("-->", "comment");
                } else if (starts_with("<![CDATA[")) {
                    skip_until("]]>", "CDATA section");
                } else if (starts_with("<?")) {
                    skip_until("?>", "processing instruction");
                } else {
                    node.children.push_back(read_element());
                }
            } else {
                ++pos_;  // character data, dropped
            }
        }
    }
};

}  // namespace

Tree ingest_xml(const std::string& text) {
    XmlReader reader(text);
    return reader.read_document();
}

}  // namespace ted
