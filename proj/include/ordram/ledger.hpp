#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ordram {

struct LedgerEntry {
    std::string digest;
    long long n = 0;            // exact value, or the lower bound
    bool exact = false;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::string witness;        // relative to the ledger directory
    std::string version;

    /// result <digest> N=<v> status=<exact|lo> nodes=<n> seconds=<s> witness=<path> version=<v>
    std::string to_line() const;
    /// Throws ParseError on malformed lines.
    static LedgerEntry parse(const std::string& line);
};

/// Append-only results file `results.ledger` plus a `witnesses/` directory.
class Ledger {
public:
    explicit Ledger(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file() const { return dir_ / "results.ledger"; }

    /// Creates the directories when missing. Throws IoError.
    void ensure() const;
    /// Appends one line with a single write() on an O_APPEND descriptor.
    void append(const LedgerEntry& e) const;
    /// Every entry; an absent file reads as empty.
    std::vector<LedgerEntry> entries() const;
    /// Latest exact entry for the digest, if any.
    std::optional<LedgerEntry> find_exact(const std::string& digest) const;
    /// Relative witness path for a digest: witnesses/<crc32 hex>.oc
    static std::string witness_name(const std::string& digest);

private:
    std::filesystem::path dir_;
};

}  // namespace ordram
