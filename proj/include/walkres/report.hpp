#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "walkres/graph.hpp"

namespace walkres {

// Key-value report, one "key = value" line per entry, deterministic order.
// Floating values are printed with 15 significant digits.
class Report {
  public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    void add(const std::string& key, double value);
    void add(const std::string& key, long value);
    void add(const std::string& key, int value) { add(key, static_cast<long>(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add_hex(const std::string& key, std::uint64_t value);

    // Echo of the invocation plus the input graph fingerprint
    // (n, m, degree multiset, edge-list checksum).
    void echo_command(int argc, char** argv);
    void fingerprint(const std::string& label, const Graph& g);

    std::string str() const { return out_.str(); }
    void print() const;

  private:
    std::ostringstream out_;
};

// "1^2 2^2" style multiset notation, ascending degree.
std::string degree_multiset(const Graph& g);

}  // namespace walkres
