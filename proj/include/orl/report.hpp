#pragma once

// Plain-text report with a trailing `key: value` block.

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orl/graph.hpp"

namespace orl {

class Report {
 public:
  std::ostream& body() { return body_; }

  template <typename T>
  Report& set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    trailer_.emplace_back(key, s.str());
    return *this;
  }
  Report& set(const std::string& key, bool value) { return set(key, value ? "true" : "false"); }
  Report& set(const std::string& key, const char* value) {
    trailer_.emplace_back(key, value);
    return *this;
  }
  Report& set(const std::string& key, const std::string& value) {
    trailer_.emplace_back(key, value);
    return *this;
  }

  void write(std::ostream& out) const {
    out << body_.str();
    if (!body_.str().empty() && body_.str().back() != '\n') out << '\n';
    out << "--\n";
    for (const auto& [k, v] : trailer_) out << k << ": " << v << '\n';
  }

  std::string str() const {
    std::ostringstream s;
    write(s);
    return s.str();
  }

 private:
  std::ostringstream body_;
  std::vector<std::pair<std::string, std::string>> trailer_;
};

inline std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

inline std::string join(const VertexSet& vs, const char* sep = " ") { return join(vs.members(), sep); }

}  // namespace orl
