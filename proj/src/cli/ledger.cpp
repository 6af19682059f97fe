#include "ordram/ledger.hpp"

#include "ordram/error.hpp"

#include <boost/crc.hpp>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace ordram {

std::string LedgerEntry::to_line() const
{
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", seconds);
    return "result " + digest + " N=" + std::to_string(n) + " status=" + (exact ? "exact" : "lo") +
           " nodes=" + std::to_string(nodes) + " seconds=" + secs + " witness=" + witness + " version=" + version;
}

LedgerEntry LedgerEntry::parse(const std::string& line)
{
    std::istringstream in(line);
    std::string word;
    LedgerEntry e;
    if (!(in >> word) || word != "result" || !(in >> e.digest)) throw ParseError("ledger: malformed line '" + line + "'");
    bool seen_n = false;
    bool seen_status = false;
    while (in >> word) {
        const std::size_t eq = word.find('=');
        if (eq == std::string::npos) throw ParseError("ledger: field without '=' in '" + line + "'");
        const std::string key = word.substr(0, eq);
        const std::string value = word.substr(eq + 1);
        try {
            if (key == "N") {
                e.n = std::stoll(value);
                seen_n = true;
            } else if (key == "status") {
                if (value != "exact" && value != "lo") throw ParseError("ledger: bad status '" + value + "'");
                e.exact = value == "exact";
                seen_status = true;
            } else if (key == "nodes") {
                e.nodes = std::stoull(value);
            } else if (key == "seconds") {
                e.seconds = std::stod(value);
            } else if (key == "witness") {
                e.witness = value;
            } else if (key == "version") {
                e.version = value;
            }
        } catch (const std::logic_error&) {
            throw ParseError("ledger: bad value for " + key + " in '" + line + "'");
        }
    }
    if (!seen_n || !seen_status) throw ParseError("ledger: missing N or status in '" + line + "'");
    return e;
}

void Ledger::ensure() const
{
    std::error_code ec;
    std::filesystem::create_directories(dir_ / "witnesses", ec);
    if (ec) throw IoError("cannot create ledger directory " + dir_.string() + ": " + ec.message());
}

void Ledger::append(const LedgerEntry& e) const
{
    ensure();
    const std::string line = e.to_line() + "\n";
    const int fd = ::open(file().c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw IoError("cannot open " + file().string() + ": " + std::strerror(errno));
    const ssize_t written = ::write(fd, line.data(), line.size());
    const int saved = errno;
    ::close(fd);
    if (written != static_cast<ssize_t>(line.size()))
        throw IoError("short write to " + file().string() + ": " + std::strerror(saved));
}

std::vector<LedgerEntry> Ledger::entries() const
{
    std::vector<LedgerEntry> out;
    if (!std::filesystem::exists(file())) return out;
    std::ifstream in(file());
    if (!in) throw IoError("cannot read " + file().string());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(LedgerEntry::parse(line));
    return out;
}

std::optional<LedgerEntry> Ledger::find_exact(const std::string& digest) const
{
    std::optional<LedgerEntry> found;
    for (auto& e : entries())
        if (e.exact && e.digest == digest) found = std::move(e);
    return found;
}

std::string Ledger::witness_name(const std::string& digest)
{
    boost::crc_32_type crc;
    crc.process_bytes(digest.data(), digest.size());
    char name[32];
    std::snprintf(name, sizeof name, "witnesses/%08x.oc", crc.checksum());
    return name;
}

}  // namespace ordram
