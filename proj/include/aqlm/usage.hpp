#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>

namespace aqlm {

namespace llm {

/// Token counts for one chat completion. Live providers report exact
/// numbers; the scripted provider replays whatever its script declares.
struct TokenUsage {
    std::int64_t input_tokens = 0;
    std::int64_t cached_input_tokens = 0;
    std::int64_t output_tokens = 0;

    TokenUsage& operator+=(const TokenUsage& o) {
        input_tokens += o.input_tokens;
        cached_input_tokens += o.cached_input_tokens;
        output_tokens += o.output_tokens;
        return *this;
    }
    bool operator==(const TokenUsage&) const = default;
};

}  // namespace llm

namespace cost {

/// Accumulated API usage for a run: per-model token tallies plus the
/// data-API call count. Updates are atomic; tallies only grow.
class UsageLedger {
  public:
    void add_llm_usage(const std::string& model, const llm::TokenUsage& usage) {
        std::lock_guard lock(mutex_);
        llm_usage_[model] += usage;
    }

    void add_data_calls(std::int64_t n = 1) {
        std::lock_guard lock(mutex_);
        data_api_calls_ += n;
    }

    std::map<std::string, llm::TokenUsage> llm_usage() const {
        std::lock_guard lock(mutex_);
        return llm_usage_;
    }

    std::int64_t data_api_calls() const {
        std::lock_guard lock(mutex_);
        return data_api_calls_;
    }

  private:
    mutable std::mutex mutex_;
    std::map<std::string, llm::TokenUsage> llm_usage_;
    std::int64_t data_api_calls_ = 0;
};

}  // namespace cost
}  // namespace aqlm
