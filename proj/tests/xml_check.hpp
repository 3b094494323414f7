#pragma once

// Minimal well-formedness check: balanced tags, quoted attributes, known
// entities. Enough for the SVG the exporter writes.

#include <cctype>
#include <string>
#include <vector>

namespace xml_check {

inline bool well_formed(const std::string& doc, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::vector<std::string> stack;
  std::size_t i = 0;
  bool root_seen = false;
  while (i < doc.size()) {
    if (doc[i] != '<') {
      if (doc[i] == '&') {
        const std::size_t semi = doc.find(';', i);
        if (semi == std::string::npos) return fail("unterminated entity");
        const std::string ent = doc.substr(i, semi - i + 1);
        if (ent != "&lt;" && ent != "&gt;" && ent != "&amp;" && ent != "&quot;" && ent != "&apos;")
          return fail("unknown entity " + ent);
        i = semi + 1;
        continue;
      }
      if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) return fail("text outside root");
      ++i;
      continue;
    }
    if (doc.compare(i, 5, "<?xml") == 0) {
      const std::size_t end = doc.find("?>", i);
      if (end == std::string::npos) return fail("unterminated declaration");
      i = end + 2;
      continue;
    }
    if (doc.compare(i, 4, "<!--") == 0) {
      const std::size_t end = doc.find("-->", i);
      if (end == std::string::npos) return fail("unterminated comment");
      i = end + 3;
      continue;
    }
    const std::size_t end = doc.find('>', i);
    if (end == std::string::npos) return fail("unterminated tag");
    std::string tag = doc.substr(i + 1, end - i - 1);
    i = end + 1;
    if (!tag.empty() && tag[0] == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      continue;
    }
    const bool self_closing = !tag.empty() && tag.back() == '/';
    if (self_closing) tag.pop_back();
    std::size_t k = 0;
    while (k < tag.size() && !std::isspace(static_cast<unsigned char>(tag[k]))) ++k;
    const std::string name = tag.substr(0, k);
    if (name.empty()) return fail("empty tag name");
    // attributes: name="value"
    while (k < tag.size()) {
      while (k < tag.size() && std::isspace(static_cast<unsigned char>(tag[k]))) ++k;
      if (k == tag.size()) break;
      const std::size_t eq = tag.find('=', k);
      if (eq == std::string::npos || eq + 1 >= tag.size() || tag[eq + 1] != '"') return fail("unquoted attribute in <" + name + ">");
      const std::size_t close = tag.find('"', eq + 2);
      if (close == std::string::npos) return fail("unterminated attribute in <" + name + ">");
      if (tag.substr(eq + 2, close - eq - 2).find('<') != std::string::npos) return fail("'<' in attribute");
      k = close + 1;
    }
    if (stack.empty()) {
      if (root_seen) return fail("second root element");
      root_seen = true;
    }
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  if (!root_seen) return fail("no root element");
  return true;
}

}  // namespace xml_check
