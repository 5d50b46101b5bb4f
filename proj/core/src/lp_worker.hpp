#pragma once

#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include <sys/types.h>

namespace mds::detail {

/// Persistent LP-solving worker process (python3 + scipy's HiGHS interface).
/// One request per solve over pipes; restarted transparently if it dies.
class LpWorker {
public:
    static LpWorker& instance();

    struct Reply {
        std::string status;           // "optimal" | "infeasible" | "error"
        double objective = 0.0;
        std::vector<double> values;
        std::string message;
    };

    /// rows: per-constraint variable indices. method: "simplex" or "ipm".
    /// costs: optional per-variable objective costs (default all-ones); the
    /// reply objective is always the plain sum of the solution values.
    Reply solve(std::size_t num_vars, const std::vector<std::vector<std::size_t>>& rows,
                const std::string& method, const std::vector<double>* costs = nullptr);

    ~LpWorker();

private:
    LpWorker() = default;
    void ensure_started();
    void shutdown();

    std::mutex mutex_;
    pid_t pid_ = -1;
    FILE* to_child_ = nullptr;
    FILE* from_child_ = nullptr;
};

}  // namespace mds::detail
