#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bipcausal/date.hpp"

namespace bipcausal::events {

struct BipRecord {
    int number = 0;
    Date date;                       // creation date anchors the signal month
    std::string kind;                // Standards Track, Informational, Process
    std::string status;
    std::set<std::string> categories;
    std::string provenance;          // "paper" or "external"
};

class BipRegistry {
public:
    explicit BipRegistry(std::vector<BipRecord> records);

    const std::vector<BipRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool contains(int number) const { return by_number_.count(number) > 0; }
    const BipRecord& at(int number) const;

private:
    std::vector<BipRecord> records_;
    std::map<int, std::size_t> by_number_;
};

/// Parses the registry CSV (`number,date,kind,status,categories,provenance`,
/// categories `|`-separated). Rejects duplicate numbers and malformed rows
/// with the offending line number.
BipRegistry load_registry(const std::string& path);

struct BipSet {
    std::string name;
    std::set<int> members;
};

/// The seven built-in sets: all proposals, the manually curated
/// economy-related union, the five major ones, economy-related minus major,
/// and the three taxonomy partitions. Throws IntegrityError if the registry
/// lacks any referenced number.
std::vector<BipSet> builtin_sets(const BipRegistry& registry);

/// Built-in set by name; throws ConfigError for unknown names.
BipSet builtin_set(const BipRegistry& registry, const std::string& name);

struct EventSignal {
    std::string name;
    std::vector<Date> months;    // the pipeline month grid
    std::vector<double> values;  // 0 or 1
    std::size_t ignored_outside_grid = 0;
};

/// Binary monthly signal: 1 for every grid month containing at least one
/// member proposal's date, 0 otherwise. Members dated outside the grid are
/// counted in ignored_outside_grid.
EventSignal build_signal(const BipRegistry& registry, const BipSet& set,
                         const std::vector<Date>& grid);

} // namespace bipcausal::events
