"""Exit codes, config-file precedence, environment defaults and determinism of the CLI."""
import json
import os
import subprocess
import sys
import tempfile


def run(cli, *args, env=None):
    return subprocess.run([cli, *args], capture_output=True, text=True, env=env)


def main():
    cli = sys.argv[1]
    failures = []

    def expect(ok, what):
        print(("ok   " if ok else "FAIL ") + what)
        if not ok:
            failures.append(what)

    expect(run(cli).returncode == 64, "no subcommand is a usage error")
    expect(run(cli, "thresholds", "--n", "seven").returncode == 64, "non-integer n is a usage error")
    expect(run(cli, "thresholds", "--n", "7", "--p", "3").returncode == 64, "supercritical p is rejected")
    expect(run(cli, "shoot", "--a", "0").returncode == 64, "zero height is rejected")
    expect(run(cli, "--help").returncode == 0, "help exits 0")

    with tempfile.TemporaryDirectory() as d:
        cfg = os.path.join(d, "run.cfg")
        with open(cfg, "w") as f:
            f.write("# thresholds at n = 8\nn = 8\nprecision = 200\n")
        doc = json.loads(run(cli, "thresholds", "--config", cfg).stdout)
        expect(doc["config"]["n_lo"] == 8 and doc["config"]["precision"] == 200, "config file values apply")
        doc = json.loads(run(cli, "thresholds", "--config", cfg, "--n", "7").stdout)
        expect(doc["config"]["n_lo"] == 7, "flags override the config file")
        env = dict(os.environ, LIOUVILLE_PRECISION="96")
        doc = json.loads(run(cli, "thresholds", "--n", "7", env=env).stdout)
        expect(doc["config"]["precision"] == 96, "environment sets the default precision")
        doc = json.loads(run(cli, "thresholds", "--n", "7", "--precision", "160", env=env).stdout)
        expect(doc["config"]["precision"] == 160, "flags override the environment")
        out = os.path.join(d, "r.csv")
        r = run(cli, "sweep", "--count", "3", "--format", "csv", "--output", out)
        with open(out) as f:
            lines = f.read().splitlines()
        expect(r.returncode == 0 and lines[0] == "n,p,M,height,class,r_cross" and len(lines) == 4, "csv to file")

    a = json.loads(run(cli, "identities", "--trials", "30", "--seed", "5").stdout)
    b = json.loads(run(cli, "identities", "--trials", "30", "--seed", "5", "--threads", "3").stdout)
    a["config"].pop("threads")
    b["config"].pop("threads")
    expect(a == b, "same seed gives identical output regardless of threads")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
