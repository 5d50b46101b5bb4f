#include "lp_worker.hpp"

#include <csignal>
#include <cstdlib>
#include <stdexcept>

#include <sys/wait.h>
#include <unistd.h>

namespace mds::detail {

namespace {

// Request:  "solve <nvars> <nrows> <method>" then one row per line
//           ("<k> <idx>..."), indices into the variable array. "solvec"
//           sends one line of nvars objective costs before the rows.
// Reply:    "optimal <objective>" + one line of nvars values,
//           or "infeasible" / "error <message>". The objective echoed is
//           always the plain sum of the values.
constexpr const char* kWorkerScript = R"PY(
import sys
import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

def main():
    stdin = sys.stdin
    while True:
        header = stdin.readline()
        if not header:
            return
        parts = header.split()
        if not parts:
            continue
        if parts[0] == "quit":
            return
        try:
            nvars, nrows, method = int(parts[1]), int(parts[2]), parts[3]
            if parts[0] == "solvec":
                costs = np.array([float(t) for t in stdin.readline().split()])
            else:
                costs = np.ones(nvars)
            ri, ci = [], []
            for r in range(nrows):
                toks = stdin.readline().split()
                k = int(toks[0])
                for t in toks[1:1 + k]:
                    ri.append(r)
                    ci.append(int(t))
            if nvars == 0 or nrows == 0:
                print("optimal 0.0")
                print(" ".join(["0"] * nvars))
                sys.stdout.flush()
                continue
            a = csr_matrix((np.ones(len(ri)), (ri, ci)), shape=(nrows, nvars))
            solver = "highs-ipm" if method == "ipm" else "highs-ds"
            res = linprog(costs, A_ub=-a, b_ub=-np.ones(nrows),
                          bounds=(0.0, 1.0), method=solver)
            if res.status == 0:
                x = np.clip(res.x, 0.0, 1.0)
                print("optimal %.17g" % float(np.sum(x)))
                print(" ".join("%.17g" % v for v in x))
            elif res.status == 2:
                print("infeasible")
            else:
                print("error solver status %d: %s" % (res.status, res.message))
        except Exception as exc:  # report, keep serving
            print("error %s" % str(exc).replace("\n", " "))
        sys.stdout.flush()

main()
)PY";

}  // namespace

LpWorker& LpWorker::instance() {
    static LpWorker worker;
    return worker;
}

void LpWorker::ensure_started() {
    if (pid_ > 0) return;
    int to_pipe[2], from_pipe[2];
    if (pipe(to_pipe) != 0 || pipe(from_pipe) != 0)
        throw std::runtime_error("lp worker: pipe() failed");
    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("lp worker: fork() failed");
    if (pid == 0) {
        dup2(to_pipe[0], STDIN_FILENO);
        dup2(from_pipe[1], STDOUT_FILENO);
        close(to_pipe[0]);
        close(to_pipe[1]);
        close(from_pipe[0]);
        close(from_pipe[1]);
        execlp("python3", "python3", "-u", "-c", kWorkerScript, (char*)nullptr);
        _exit(127);
    }
    close(to_pipe[0]);
    close(from_pipe[1]);
    to_child_ = fdopen(to_pipe[1], "w");
    from_child_ = fdopen(from_pipe[0], "r");
    if (!to_child_ || !from_child_) throw std::runtime_error("lp worker: fdopen failed");
    pid_ = pid;
    signal(SIGPIPE, SIG_IGN);
}

void LpWorker::shutdown() {
    if (pid_ <= 0) return;
    if (to_child_) {
        fputs("quit\n", to_child_);
        fflush(to_child_);
        fclose(to_child_);
        to_child_ = nullptr;
    }
    if (from_child_) {
        fclose(from_child_);
        from_child_ = nullptr;
    }
    int status = 0;
    waitpid(pid_, &status, 0);
    pid_ = -1;
}

LpWorker::~LpWorker() { shutdown(); }

LpWorker::Reply LpWorker::solve(std::size_t num_vars,
                                const std::vector<std::vector<std::size_t>>& rows,
                                const std::string& method,
                                const std::vector<double>* costs) {
    std::lock_guard<std::mutex> lock(mutex_);
    for (int attempt = 0; attempt < 2; ++attempt) {
        ensure_started();
        fprintf(to_child_, "%s %zu %zu %s\n", costs ? "solvec" : "solve", num_vars, rows.size(),
                method.c_str());
        if (costs) {
            for (std::size_t i = 0; i < num_vars; ++i)
                fprintf(to_child_, i ? " %.17g" : "%.17g", (*costs)[i]);
            fputc('\n', to_child_);
        }
        for (const auto& row : rows) {
            fprintf(to_child_, "%zu", row.size());
            for (std::size_t idx : row) fprintf(to_child_, " %zu", idx);
            fputc('\n', to_child_);
        }
        if (fflush(to_child_) != 0) {
            shutdown();  // worker died mid-write, retry once
            continue;
        }

        char status_buf[4096];
        if (!fgets(status_buf, sizeof(status_buf), from_child_)) {
            shutdown();
            continue;
        }
        std::string line(status_buf);
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();

        Reply reply;
        if (line.rfind("optimal", 0) == 0) {
            reply.status = "optimal";
            reply.objective = std::strtod(line.c_str() + 7, nullptr);
            reply.values.resize(num_vars);
            for (std::size_t i = 0; i < num_vars; ++i)
                if (fscanf(from_child_, "%lf", &reply.values[i]) != 1) {
                    shutdown();
                    reply.status = "error";
                    reply.message = "truncated solution vector from worker";
                    return reply;
                }
            int ch;
            do { ch = fgetc(from_child_); } while (ch != '\n' && ch != EOF);
        } else if (line.rfind("infeasible", 0) == 0) {
            reply.status = "infeasible";
        } else if (line.rfind("error", 0) == 0) {
            reply.status = "error";
            reply.message = line.size() > 6 ? line.substr(6) : "unknown solver error";
        } else {
            shutdown();
            reply.status = "error";
            reply.message = "unexpected worker reply: " + line;
        }
        return reply;
    }
    Reply reply;
    reply.status = "error";
    reply.message = "lp worker unavailable (is python3 with scipy installed?)";
    return reply;
}

}  // namespace mds::detail
