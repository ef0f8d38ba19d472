#include "halg/report.hpp"

#include <algorithm>
#include <exception>

namespace halg {

bool Tally::expect(bool ok, const std::function<std::string()>& witness) {
    ++cases_;
    if (!ok && !first_failure_) first_failure_ = witness();
    return ok;
}

void Tally::fail(const std::string& witness) {
    ++cases_;
    if (!first_failure_) first_failure_ = witness;
}

void Tally::guard(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        fail(std::string("exception: ") + e.what());
    }
}

CheckResult Tally::result() const {
    if (first_failure_) return CheckResult{id_, Status::Fail, *first_failure_, cases_};
    return CheckResult{id_, Status::Pass, "", cases_};
}

void Report::add(const CheckResult& r) {
    // a repeated id keeps the worst outcome
    for (auto& it : items_)
        if (it.id == r.id) {
            it.cases += r.cases;
            if (it.status != Status::Fail && r.status == Status::Fail) {
                it.status = Status::Fail;
                it.witness = r.witness;
            } else if (it.status == Status::Skipped && r.status == Status::Pass) {
                it.status = Status::Pass;
                it.witness.clear();
            }
            return;
        }
    items_.push_back(r);
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (CheckResult r : other.items_) {
        r.id = prefix + r.id;
        add(r);
    }
}

bool Report::ok() const {
    return std::none_of(items_.begin(), items_.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& r : items_)
        if (r.status == Status::Fail) out.push_back(r.id);
    return out;
}

const CheckResult* Report::find(const std::string& id) const {
    for (const auto& r : items_)
        if (r.id == id) return &r;
    return nullptr;
}

bool Report::passed(const std::string& id) const {
    const CheckResult* r = find(id);
    return r && r->status == Status::Pass;
}

bool Report::failed(const std::string& id) const {
    const CheckResult* r = find(id);
    return r && r->status == Status::Fail;
}

}  // namespace halg
