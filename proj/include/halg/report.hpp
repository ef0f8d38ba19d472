#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace halg {

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
    std::string id;
    Status status = Status::Pass;
    std::string witness;  // first failing case, or skip reason
    std::size_t cases = 0;
};

// Accumulates one identity over many cases, keeping the first counterexample.
class Tally {
public:
    explicit Tally(std::string id) : id_(std::move(id)) {}
    bool expect(bool ok, const std::function<std::string()>& witness);
    void fail(const std::string& witness);
    // Runs fn, turning an escaped exception into a failure of this identity.
    void guard(const std::function<void()>& fn);
    CheckResult result() const;
    bool ok() const { return !first_failure_; }

private:
    std::string id_;
    std::optional<std::string> first_failure_;
    std::size_t cases_ = 0;
};

class Report {
public:
    void add(const CheckResult& r);
    void add(const Tally& t) { add(t.result()); }
    void pass(const std::string& id) { add(CheckResult{id, Status::Pass, "", 1}); }
    void fail(const std::string& id, const std::string& witness) { add(CheckResult{id, Status::Fail, witness, 1}); }
    void skip(const std::string& id, const std::string& reason) { add(CheckResult{id, Status::Skipped, reason, 0}); }
    void merge(const Report& other, const std::string& prefix = "");

    const std::vector<CheckResult>& items() const { return items_; }
    bool ok() const;
    bool empty_of_failures() const { return ok(); }
    std::vector<std::string> failures() const;
    const CheckResult* find(const std::string& id) const;
    bool passed(const std::string& id) const;
    bool failed(const std::string& id) const;

private:
    std::vector<CheckResult> items_;
};

}  // namespace halg
