import json

from fsdsq.cli import main

V = "abaaabaabaaabb"
W1 = "a" + (V + "ab" + V) * 2
EQUAL_17 = "abaababaabaababaa"
EQUAL_17_S = [2, 2, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCensus:
    def test_tsv(self, capsys):
        code, out, err = run(capsys, "census", EQUAL_17, "--format", "tsv")
        assert code == 0
        rows = out.strip().split("\n")
        assert rows[0] == "index\tletter\ts_i"
        assert len(rows) == 18
        assert [int(r.split("\t")[2]) for r in rows[1:]] == EQUAL_17_S
        assert "distinct_squares=10" in err

    def test_plain_tiny(self, capsys):
        code, out, _ = run(capsys, "census", "ab")
        assert code == 0
        assert "distinct squares: 0" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "census", EQUAL_17, "-f", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["schema_version"] == 1
        assert payload["s"] == EQUAL_17_S
        assert payload["longest_run"] == {"start": 1, "length": 2}

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "words.txt"
        path.write_text(EQUAL_17 + "\nab\n")
        code, out, _ = run(capsys, "census", str(path), "-f", "tsv")
        assert code == 0
        assert out.count("index\tletter\ts_i") == 2

    def test_invalid_characters(self, capsys):
        code, _, err = run(capsys, "census", "abC")
        assert code == 1
        assert "error" in err


class TestAnalyze:
    def test_single_double_square(self, capsys):
        code, out, _ = run(capsys, "analyze", "abaababaab")
        assert code == 0
        assert "FS-double square at 1" in out
        assert "adjacent pair" not in out

    def test_equal_pair_json(self, capsys):
        code, out, _ = run(capsys, "analyze", EQUAL_17, "-f", "json")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["double_squares"]) == 2
        pair = payload["pairs"][0]
        assert pair["kind"] == "equal"
        assert pair["case"] == 12
        assert pair["mate"] == "alpha"
        assert all(c["pass"] for c in pair["checks"])
        assert payload["findings"] == []

    def test_w1_unequal_delta(self, capsys):
        code, out, _ = run(capsys, "analyze", W1, "-f", "json")
        assert code == 0
        pair = json.loads(out)["pairs"][0]
        assert pair["kind"] == "unequal"
        assert pair["mate"] == "delta"
        assert pair["first"] == {"position": 1, "sq_len": 4, "SQ_len": 7,
                                 "x1": "a", "x2": "ab", "p1": 1, "p2": 1}

    def test_byte_identical_across_invocations(self, capsys):
        _, out1, _ = run(capsys, "analyze", EQUAL_17, "-f", "json")
        _, out2, _ = run(capsys, "analyze", EQUAL_17, "-f", "json")
        assert out1 == out2


class TestGenerate:
    def test_run_target_one(self, capsys):
        code, out, _ = run(capsys, "generate", "--kind", "run", "--target", "1")
        assert code == 0
        assert out.splitlines()[0] == "abaababaab"

    def test_unequal_short_is_w1(self, capsys):
        code, out, _ = run(capsys, "generate", "--kind", "unequal",
                           "--seed", "aabaaabaabaaab", "--variant", "short")
        assert code == 0
        assert out.splitlines()[0] == W1

    def test_equal_seed(self, capsys):
        code, out, _ = run(capsys, "generate", "--kind", "equal",
                           "--seed", "abaababaabaababa", "-f", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["word"] == EQUAL_17
        assert payload["T"] == 2
        assert payload["ratio"] == {"num": 2, "den": 17}

    def test_missing_seed_is_usage_error(self, capsys):
        code, _, err = run(capsys, "generate", "--kind", "equal")
        assert code == 1
        assert "seed" in err


class TestVerify:
    def test_small_sweep_clean(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-len", "10", "-f", "json",
                           "--deterministic")
        assert code == 0
        payload = json.loads(out)
        assert payload["findings"] == []
        assert payload["total_words"] == 1023
        assert "elapsed_seconds" not in payload

    def test_timing_present_without_flag(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-len", "6", "-f", "json")
        assert code == 0
        assert "elapsed_seconds" in json.loads(out)

    def test_deterministic_output_stable(self, capsys):
        _, out1, _ = run(capsys, "verify", "--max-len", "9", "-f", "json",
                         "--deterministic")
        _, out2, _ = run(capsys, "verify", "--max-len", "9", "-f", "json",
                         "--deterministic", "--jobs", "2")
        assert out1 == out2

    def test_tsv_table(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-len", "8", "-f", "tsv")
        assert code == 0
        rows = out.strip().split("\n")
        assert rows[0].startswith("n\twords\t")
        assert len(rows) == 9

    def test_ceiling_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--max-len", "19")
        assert code == 1
        assert "ceiling" in err

    def test_ceiling_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("FSDSQ_COST_CEILING", "5")
        code, _, err = run(capsys, "verify", "--max-len", "6")
        assert code == 1 and "ceiling" in err
        monkeypatch.setenv("FSDSQ_COST_CEILING", "50")
        code, _, _ = run(capsys, "verify", "--alphabet-size", "1",
                         "--max-len", "40", "-f", "json", "--deterministic")
        assert code == 0
