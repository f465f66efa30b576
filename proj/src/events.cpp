#include "bipcausal/events.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bipcausal/errors.hpp"

namespace bipcausal::events {

namespace {

// Membership constants for the built-in sets. The economy-related union is
// the eight category lists combined; the taxonomy triple partitions most of
// that union by which arm of the policy taxonomy the proposal lands in.
const std::set<int> kSupplyLiquidity = {9, 42, 100, 101, 102, 103, 104, 105, 106, 107, 109, 152, 331};
const std::set<int> kTransactions = {11, 13, 16, 65, 66, 68, 78, 79, 112, 115, 116, 118,
                                     125, 127, 129, 134, 146, 174, 322, 324, 330, 352, 370, 373};
const std::set<int> kEmbeddedFinance = {197, 199, 300, 345};
const std::set<int> kSecurityPrivacy = {30, 50, 53, 54, 151, 351};
const std::set<int> kHdWallets = {32, 39, 43, 44, 49, 84, 88, 175};
const std::set<int> kSegwit = {91, 141, 148, 173};
const std::set<int> kTaproot = {326, 327, 341, 343, 371};
const std::set<int> kAdoption = {1, 21, 47, 61, 70, 72, 75, 111, 380};

const std::set<int> kMajor = {32, 42, 50, 141, 341};

const std::set<int> kFiscalLike = {78, 199};
const std::set<int> kMonetaryLike = {11, 13, 16, 30, 42, 53, 54, 65, 66, 68, 75, 100,
                                     101, 102, 103, 104, 105, 106, 107, 109, 112, 115,
                                     118, 125, 127, 141, 146, 152, 173, 174, 197, 300,
                                     331, 345, 370, 371, 373};
const std::set<int> kPurelyTokenomic = {1, 9, 21, 32, 39, 44, 47, 61, 70, 72, 79,
                                        88, 91, 111, 129, 148, 175, 322, 324, 327,
                                        330, 341, 343, 351, 352, 380};

std::set<int> economy_related() {
    std::set<int> u;
    for (const auto* s : {&kSupplyLiquidity, &kTransactions, &kEmbeddedFinance, &kSecurityPrivacy,
                          &kHdWallets, &kSegwit, &kTaproot, &kAdoption})
        u.insert(s->begin(), s->end());
    return u;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

BipRegistry::BipRegistry(std::vector<BipRecord> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(),
              [](const BipRecord& a, const BipRecord& b) { return a.number < b.number; });
    for (std::size_t i = 0; i < records_.size(); ++i) {
        if (!by_number_.emplace(records_[i].number, i).second)
            throw IntegrityError("registry: duplicate number " +
                                 std::to_string(records_[i].number));
    }
}

const BipRecord& BipRegistry::at(int number) const {
    auto it = by_number_.find(number);
    if (it == by_number_.end())
        throw IntegrityError("registry: number " + std::to_string(number) + " not present");
    return records_[it->second];
}

BipRegistry load_registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("registry: cannot open '" + path + "'");
    std::string line;
    std::size_t lineno = 0;
    std::vector<BipRecord> records;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "number,date,kind,status,categories,provenance")
                throw ParseError("registry '" + path + "' line 1: unexpected header '" + line + "'");
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != 6)
            throw ParseError("registry '" + path + "' line " + std::to_string(lineno) +
                             ": expected 6 fields, got " + std::to_string(fields.size()));
        BipRecord rec;
        try {
            rec.number = std::stoi(fields[0]);
        } catch (const std::exception&) {
            throw ParseError("registry '" + path + "' line " + std::to_string(lineno) +
                             ": bad number '" + fields[0] + "'");
        }
        if (rec.number <= 0)
            throw ParseError("registry '" + path + "' line " + std::to_string(lineno) +
                             ": number must be positive");
        if (fields[1].empty())
            throw ParseError("registry '" + path + "' line " + std::to_string(lineno) +
                             ": missing date");
        try {
            rec.date = Date::parse(fields[1]);
        } catch (const ParseError& e) {
            throw ParseError("registry '" + path + "' line " + std::to_string(lineno) + ": " +
                             e.what());
        }
        rec.kind = fields[2];
        rec.status = fields[3];
        for (const auto& tag : split(fields[4], '|'))
            if (!tag.empty()) rec.categories.insert(tag);
        rec.provenance = fields[5];
        records.push_back(std::move(rec));
    }
    try {
        return BipRegistry(std::move(records));
    } catch (const IntegrityError& e) {
        throw IntegrityError(std::string(e.what()) + " in '" + path + "'");
    }
}

std::vector<BipSet> builtin_sets(const BipRegistry& registry) {
    std::set<int> all;
    for (const auto& r : registry.records()) all.insert(r.number);

    const std::set<int> economy = economy_related();
    std::set<int> except_major;
    std::set_difference(economy.begin(), economy.end(), kMajor.begin(), kMajor.end(),
                        std::inserter(except_major, except_major.begin()));

    std::vector<BipSet> sets = {
        {"All BIPs", all},
        {"All Economy-Related BIPs", economy},
        {"Major Economy-Related BIPs", kMajor},
        {"All Economy-Related BIPs (Except the major ones)", except_major},
        {"Fiscal-Like BIPs", kFiscalLike},
        {"Monetary-Like BIPs", kMonetaryLike},
        {"Purely Tokenomic BIPs", kPurelyTokenomic},
    };
    for (const auto& s : sets)
        for (int n : s.members)
            if (!registry.contains(n))
                throw IntegrityError("registry lacks number " + std::to_string(n) +
                                     " referenced by set '" + s.name + "'");
    return sets;
}

BipSet builtin_set(const BipRegistry& registry, const std::string& name) {
    for (auto& s : builtin_sets(registry))
        if (s.name == name) return s;
    throw ConfigError("unknown built-in set '" + name + "'");
}

EventSignal build_signal(const BipRegistry& registry, const BipSet& set,
                         const std::vector<Date>& grid) {
    if (grid.empty()) throw DomainError("build_signal: empty month grid");
    EventSignal sig;
    sig.name = set.name;
    sig.months = grid;
    sig.values.assign(grid.size(), 0.0);
    std::map<Date, std::size_t> index;
    for (std::size_t i = 0; i < grid.size(); ++i) index[grid[i]] = i;
    for (int n : set.members) {
        const Date key = registry.at(n).date.month_key();
        auto it = index.find(key);
        if (it == index.end())
            ++sig.ignored_outside_grid;
        else
            sig.values[it->second] = 1.0;
    }
    return sig;
}

} // namespace bipcausal::events
