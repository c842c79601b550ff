#include "gb/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gb {
namespace {

constexpr const char* kMagic = "gbscan-checkpoint v1";

std::string hex16(u64 v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

bool parse_hex16(const std::string& s, u64& out) {
    if (s.size() != 16) return false;
    u64 v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= u64(c - '0');
        else if (c >= 'a' && c <= 'f') v |= u64(c - 'a' + 10);
        else return false;
    }
    out = v;
    return true;
}

std::string payload_text(const Checkpoint& c) {
    std::string text;
    text += kMagic;
    text += '\n';
    text += "config ";
    text += hex16(c.config_digest);
    text += '\n';
    text += "last ";
    text += std::to_string(c.last_completed);
    text += '\n';
    text += "violations ";
    for (std::size_t i = 0; i < c.violations.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(c.violations[i]);
    }
    text += '\n';
    return text;
}

[[noreturn]] void corrupt(const std::string& path, const std::string& why) {
    throw CheckpointCorruptError("checkpoint " + path + ": " + why);
}

}  // namespace

u64 fnv1a64(const std::string& data) {
    u64 hash = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

void checkpoint_save(const std::string& path, const Checkpoint& checkpoint) {
    const std::string payload = payload_text(checkpoint);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot open " + tmp);
        out << payload << "checksum " << hex16(fnv1a64(payload)) << '\n';
        out.flush();
        if (!out) throw std::runtime_error("checkpoint: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: rename failed for " + path);
}

Checkpoint checkpoint_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();

    // The checksum line covers every byte before it.
    const std::string marker = "checksum ";
    const std::size_t pos = content.rfind(marker);
    if (pos == std::string::npos || pos == 0 || content[pos - 1] != '\n')
        corrupt(path, "missing checksum line");
    const std::string payload = content.substr(0, pos);
    std::string sum_line = content.substr(pos + marker.size());
    if (sum_line.empty() || sum_line.back() != '\n') corrupt(path, "truncated checksum line");
    sum_line.pop_back();
    u64 stored_sum = 0;
    if (!parse_hex16(sum_line, stored_sum)) corrupt(path, "malformed checksum");
    if (stored_sum != fnv1a64(payload)) corrupt(path, "checksum mismatch");

    std::istringstream lines(payload);
    std::string line;
    Checkpoint c;

    if (!std::getline(lines, line) || line != kMagic) corrupt(path, "bad header");

    if (!std::getline(lines, line) || line.rfind("config ", 0) != 0 ||
        !parse_hex16(line.substr(7), c.config_digest))
        corrupt(path, "bad config line");

    if (!std::getline(lines, line) || line.rfind("last ", 0) != 0)
        corrupt(path, "bad last line");
    try {
        c.last_completed = std::stoull(line.substr(5));
    } catch (const std::exception&) {
        corrupt(path, "bad last value");
    }

    if (!std::getline(lines, line) || line.rfind("violations", 0) != 0 ||
        (line.size() > 10 && line[10] != ' '))
        corrupt(path, "bad violations line");
    std::string list = line.size() > 11 ? line.substr(11) : "";
    std::size_t start = 0;
    while (start < list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) comma = list.size();
        try {
            c.violations.push_back(std::stoull(list.substr(start, comma - start)));
        } catch (const std::exception&) {
            corrupt(path, "bad violations value");
        }
        start = comma + 1;
    }

    if (std::getline(lines, line) && !line.empty()) corrupt(path, "trailing data");
    return c;
}

}  // namespace gb
