#ifndef AMPCYL_TESTS_XML_CHECK_HPP
#define AMPCYL_TESTS_XML_CHECK_HPP

#include <cctype>
#include <string>
#include <vector>

namespace xmlcheck {

// Minimal well-formedness: balanced tags, quoted attributes, one root.
inline bool well_formed(const std::string& s, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::vector<std::string> stack;
  std::size_t i = 0, roots = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(s[i]))) return fail("text outside root");
      if (s[i] == '&') {
        auto semi = s.find(';', i);
        if (semi == std::string::npos) return fail("bare ampersand");
        std::string ent = s.substr(i, semi - i + 1);
        if (ent != "&lt;" && ent != "&gt;" && ent != "&amp;" && ent != "&quot;" && ent != "&apos;")
          return fail("unknown entity " + ent);
      }
      ++i;
      continue;
    }
    if (s.compare(i, 5, "<?xml") == 0) {
      if (i != 0) return fail("misplaced declaration");
      auto e = s.find("?>", i);
      if (e == std::string::npos) return fail("open declaration");
      i = e + 2;
      continue;
    }
    if (s.compare(i, 4, "<!--") == 0) {
      auto e = s.find("-->", i);
      if (e == std::string::npos) return fail("open comment");
      i = e + 3;
      continue;
    }
    bool closing = i + 1 < s.size() && s[i + 1] == '/';
    std::size_t j = i + (closing ? 2 : 1);
    std::size_t name_start = j;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '-' || s[j] == ':' || s[j] == '_')) ++j;
    std::string name = s.substr(name_start, j - name_start);
    if (name.empty()) return fail("empty tag name");
    bool self_close = false;
    char quote = 0;
    for (; j < s.size(); ++j) {
      if (quote) {
        if (s[j] == quote) quote = 0;
        else if (s[j] == '<') return fail("'<' inside attribute");
        continue;
      }
      if (s[j] == '"' || s[j] == '\'') quote = s[j];
      else if (s[j] == '>') break;
      else if (s[j] == '<') return fail("'<' inside tag");
    }
    if (j == s.size()) return fail("unterminated tag " + name);
    self_close = s[j - 1] == '/';
    if (closing) {
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
    } else if (!self_close) {
      if (stack.empty()) ++roots;
      stack.push_back(name);
    } else if (stack.empty()) {
      ++roots;
    }
    i = j + 1;
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (roots != 1) return fail("expected one root element");
  return true;
}

} // namespace xmlcheck

#endif // AMPCYL_TESTS_XML_CHECK_HPP
