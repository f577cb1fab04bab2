#include "walkres/report.hpp"

#include <iomanip>
#include <iostream>
#include <map>

namespace walkres {

void Report::add(const std::string& key, const std::string& value) {
    out_ << key << " = " << value << '\n';
}

void Report::add(const std::string& key, double value) {
    std::ostringstream v;
    v << std::setprecision(15) << value;
    add(key, v.str());
}

void Report::add(const std::string& key, long value) {
    add(key, std::to_string(value));
}

void Report::add_hex(const std::string& key, std::uint64_t value) {
    std::ostringstream v;
    v << std::hex << std::setfill('0') << std::setw(16) << value;
    add(key, v.str());
}

void Report::echo_command(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd += ' ';
        cmd += argv[i];
    }
    add("command", cmd);
}

void Report::fingerprint(const std::string& label, const Graph& g) {
    add(label + ".n", static_cast<long>(g.num_vertices()));
    add(label + ".m", g.num_edges());
    add(label + ".degrees", degree_multiset(g));
    add_hex(label + ".checksum", edge_list_checksum(g));
}

void Report::print() const { std::cout << out_.str() << std::flush; }

std::string degree_multiset(const Graph& g) {
    std::map<int, int> hist;
    for (int v = 0; v < g.num_vertices(); ++v) ++hist[g.degree(v)];
    std::string out;
    for (auto [deg, count] : hist) {
        if (!out.empty()) out += ' ';
        out += std::to_string(deg) + "^" + std::to_string(count);
    }
    return out;
}

}  // namespace walkres
