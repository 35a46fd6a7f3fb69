#include "momark/solvers.hpp"

#include "momark/io.hpp"

#include <algorithm>
#include <cerrno>
#include <csignal>
#include <cstring>
#include <iostream>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

extern char** environ;

namespace momark {

namespace {

void ignore_sigpipe()
{
    static const bool once = [] {
        std::signal(SIGPIPE, SIG_IGN);
        return true;
    }();
    (void)once;
}

void close_fd(int& fd)
{
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

} // namespace

std::string protocol_line(char tag, const Eigen::VectorXd& values)
{
    std::string out(1, tag);
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        out += ' ';
        out += io::format_double(values(i));
    }
    return out;
}

ExternalSolver::ExternalSolver(const std::string& command, const ProblemMeta& meta, FeCount budget,
                               std::uint64_t seed, ExternalOptions options)
    : command_(command), n_(meta.n), options_(options)
{
    ignore_sigpipe();
    int in_pipe[2];
    int out_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0)
        throw IoError("pipe: " + std::string(std::strerror(errno)));
    if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        throw IoError("pipe: " + std::string(std::strerror(errno)));
    }

    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
    posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);

    // Own process group, so a kill reaches whatever the shell started.
    posix_spawnattr_t attr;
    posix_spawnattr_init(&attr);
    posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
    posix_spawnattr_setpgroup(&attr, 0);

    const char* argv[] = {"/bin/sh", "-c", command_.c_str(), nullptr};
    pid_t pid = -1;
    const int rc = ::posix_spawn(&pid, "/bin/sh", &actions, &attr, const_cast<char* const*>(argv), environ);
    posix_spawn_file_actions_destroy(&actions);
    posix_spawnattr_destroy(&attr);
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    if (rc != 0) {
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        throw IoError("cannot spawn '" + command_ + "': " + std::strerror(rc));
    }
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];

    send("MOBENCH 1 " + meta.name + " " + std::to_string(meta.n) + " " + std::to_string(meta.m) + " "
         + std::to_string(budget) + " " + std::to_string(seed));
    send(protocol_line('L', meta.lower));
    send(protocol_line('U', meta.upper));
}

ExternalSolver::~ExternalSolver()
{
    terminate();
}

void ExternalSolver::send(const std::string& line)
{
    if (to_child_ < 0)
        return;
    std::string data = line + "\n";
    const char* p = data.data();
    std::size_t left = data.size();
    while (left > 0) {
        const ssize_t w = ::write(to_child_, p, left);
        if (w < 0) {
            if (errno == EINTR)
                continue;
            // Child closed its input; the next read reports the truncation.
            close_fd(to_child_);
            return;
        }
        p += w;
        left -= static_cast<std::size_t>(w);
    }
}

std::optional<std::string> ExternalSolver::read_line()
{
    while (true) {
        const std::size_t nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            ++line_no_;
            return std::string(io::chomp(line));
        }
        if (from_child_ < 0)
            return std::nullopt;
        pollfd pfd{from_child_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, static_cast<int>(options_.read_timeout.count()));
        if (ready < 0) {
            if (errno == EINTR)
                continue;
            throw IoError("poll: " + std::string(std::strerror(errno)));
        }
        if (ready == 0)
            throw ProtocolError("external solver '" + command_ + "' timed out after line "
                                + std::to_string(line_no_));
        char chunk[4096];
        const ssize_t r = ::read(from_child_, chunk, sizeof chunk);
        if (r < 0) {
            if (errno == EINTR)
                continue;
            throw IoError("read: " + std::string(std::strerror(errno)));
        }
        if (r == 0) {
            close_fd(from_child_);
            if (!buffer_.empty()) {
                std::string line = std::move(buffer_);
                buffer_.clear();
                ++line_no_;
                return line;
            }
            return std::nullopt;
        }
        buffer_.append(chunk, static_cast<std::size_t>(r));
    }
}

std::optional<DecisionVector> ExternalSolver::ask()
{
    const std::optional<std::string> line = read_line();
    if (!line) {
        truncated_ = true;
        const std::string msg = "external solver '" + command_ + "' closed its output early";
        warnings_.push_back(msg);
        std::cerr << "warning: " << msg << "\n";
        return std::nullopt;
    }
    const auto fields = io::split(*line, ' ');
    const std::string where = "external solver line " + std::to_string(line_no_) + ": ";
    if (fields.empty() || fields[0] != "X")
        throw ProtocolError(where + "expected 'X ...', got '" + *line + "'");
    if (static_cast<int>(fields.size()) - 1 != n_)
        throw ProtocolError(where + "expected " + std::to_string(n_) + " coordinates, got "
                            + std::to_string(fields.size() - 1));
    DecisionVector x(n_);
    for (int i = 0; i < n_; ++i) {
        try {
            x(i) = io::parse_double(fields[static_cast<std::size_t>(i) + 1]);
        } catch (const IoError& e) {
            throw ProtocolError(where + e.what());
        }
    }
    return x;
}

void ExternalSolver::tell(const DecisionVector&, const ObjectiveVector& f)
{
    send(protocol_line('F', f));
}

void ExternalSolver::reject(const std::string& reason)
{
    std::string msg = reason;
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    send("ERROR " + msg);
    terminate();
}

void ExternalSolver::finish()
{
    if (finished_)
        return;
    finished_ = true;
    send("STOP");
    terminate();
}

void ExternalSolver::terminate()
{
    close_fd(to_child_);
    if (pid_ > 0) {
        const auto deadline = std::chrono::steady_clock::now() + options_.exit_grace;
        int status = 0;
        while (true) {
            const pid_t r = ::waitpid(pid_, &status, WNOHANG);
            if (r == pid_ || (r < 0 && errno != EINTR))
                break;
            if (std::chrono::steady_clock::now() >= deadline) {
                ::kill(-pid_, SIGKILL);
                ::waitpid(pid_, &status, 0);
                killed_ = true;
                break;
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(5));
        }
        pid_ = -1;
    }
    close_fd(from_child_);
}

EvaluationStream external_solver_session(const SolverDescriptor& descriptor, const ProblemInstance& problem,
                                         FeCount budget, std::uint64_t seed, ExternalOptions options)
{
    if (!descriptor.external())
        throw ConfigError("solver " + descriptor.name + " is not external");
    ExternalSolver session(descriptor.command, problem.meta(), budget, seed, options);
    return drive(session, problem, budget);
}

} // namespace momark
