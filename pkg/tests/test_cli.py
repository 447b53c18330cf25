# tests/test_cli.py
import json

from cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED, cli, run
from services.graph_core import read_graphs, to_graph6
from services.pattern_detector import CATALOG

HAJOS = to_graph6(CATALOG["hajos"].graph)


# Caso de sucesso - classificação em texto
def test_classify_k4_text(cli_runner):
    result = cli_runner.invoke(cli, ["classify"], input="C~\n")
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines()[0] == "C~:"
    assert "  helly: sim" in result.stdout


def test_classify_json_for_each_graph(cli_runner):
    result = cli_runner.invoke(cli, ["--output", "json", "classify"], input=f"C~\n{HAJOS}\n")
    assert result.exit_code == EXIT_OK
    reports = [json.loads(line) for line in result.stdout.splitlines()]
    assert len(reports) == 2
    assert reports[1]["classes"]["helly"]["member"] is False
    assert reports[1]["classes"]["helly"]["witness"]["pattern"] == "hajos"


def test_classify_rejects_non_chordal_input(cli_runner):
    result = cli_runner.invoke(cli, ["classify"], input="Cl\n")
    assert result.exit_code == EXIT_USAGE
    assert "classify exige grafo cordal" in result.stderr
    assert result.stdout == ""


def test_classify_edge_list_uses_vertex_names(cli_runner):
    result = cli_runner.invoke(cli, ["classify"], input="a x\nx b\nb y\ny c\n")
    assert result.exit_code == EXIT_OK
    assert "ii: não (P4 em {a,x,b,y})" in result.stdout


def test_separators_text_matrix(cli_runner):
    gem = to_graph6(CATALOG["gem"].graph)
    result = cli_runner.invoke(cli, ["separators"], input=gem + "\n")
    assert result.exit_code == EXIT_OK
    assert "S0 = {1,4}" in result.stdout
    assert "S0: - O" in result.stdout


def test_cliquetree_defaults_to_dot(cli_runner):
    result = cli_runner.invoke(cli, ["cliquetree", "--seed", "3"], input="Ch\n")
    assert result.exit_code == EXIT_OK
    assert result.stdout.startswith("graph clique_tree {")


def test_cliquetree_rejects_text_output(cli_runner):
    result = cli_runner.invoke(cli, ["--output", "text", "cliquetree"], input="Ch\n")
    assert result.exit_code == EXIT_USAGE


def test_helly_reports_witness(cli_runner):
    result = cli_runner.invoke(cli, ["helly"], input=HAJOS + "\n")
    assert result.exit_code == EXIT_OK
    assert "não Helly (testemunha {0,1}, {0,2}, {1,2})" in result.stdout


def test_patterns_profile(cli_runner):
    result = cli_runner.invoke(cli, ["patterns"], input="C~\nCh\n")
    assert result.exit_code == EXIT_OK
    assert result.stdout.splitlines() == ["C~: -", "Ch: P4"]


def test_enumerate_three_vertices(cli_runner):
    result = cli_runner.invoke(cli, ["enumerate", "--max-n", "3", "--min-n", "3", "--filter", "all"])
    assert result.exit_code == EXIT_OK
    assert len(result.stdout.splitlines()) == 4


def test_enumerate_edge_list_output_reads_back(cli_runner):
    result = cli_runner.invoke(cli, ["--output", "edgelist", "enumerate", "--max-n", "3", "--min-n", "3", "--filter", "all"])
    assert result.exit_code == EXIT_OK
    graphs = read_graphs(result.stdout)
    assert len(graphs) == 4
    assert all(g.n == 3 for g in graphs)
    assert sorted(g.edge_count for g in graphs) == [0, 1, 2, 3]


def test_enumerate_help_explains_exact_size(cli_runner):
    result = cli_runner.invoke(cli, ["enumerate", "--help"])
    assert result.exit_code == EXIT_OK
    assert "--min-n 3 --max-n 3" in " ".join(result.stdout.split())


def test_edge_list_output_only_for_enumerate(cli_runner):
    result = cli_runner.invoke(cli, ["--output", "edgelist", "patterns"], input="C~\n")
    assert result.exit_code == EXIT_USAGE


def test_verify_small_corpus_passes(cli_runner):
    result = cli_runner.invoke(cli, ["--seeds", "0,1", "verify", "--max-n", "4"])
    assert result.exit_code == EXIT_OK
    assert "result: PASS" in result.stdout


def test_verify_json_output(cli_runner):
    result = cli_runner.invoke(cli, ["--seeds", "0-1", "--output", "json", "verify", "--max-n", "3"])
    assert result.exit_code == EXIT_OK
    document = json.loads(result.stdout)
    assert document["corpus"]["seeds"] == [0, 1]
    assert document["passed"] is True


def test_verify_mutant_fails_with_exit_one(cli_runner):
    result = cli_runner.invoke(cli, ["--seeds", "0", "verify", "--max-n", "4", "--mutant", "claw-as-k14"])
    assert result.exit_code == EXIT_VERIFICATION_FAILED
    assert "result: FAIL" in result.stdout


def test_verify_external_corpus(cli_runner, tmp_path):
    corpus = tmp_path / "corpus.g6"
    corpus.write_text(f"{HAJOS}\nC~\n")
    result = cli_runner.invoke(cli, ["--seeds", "0", "verify", str(corpus)])
    assert result.exit_code == EXIT_OK
    assert "graphs=2" in result.stdout


# Casos de erro - código 2 com diagnóstico no stderr
def test_malformed_graph6_exits_two(cli_runner):
    result = cli_runner.invoke(cli, ["--format", "graph6", "classify"], input="C!\n")
    assert result.exit_code == EXIT_USAGE
    assert "linha 1" in result.stderr


def test_non_chordal_input_to_chordal_only_command(cli_runner):
    result = cli_runner.invoke(cli, ["separators"], input="Cl\n")
    assert result.exit_code == EXIT_USAGE
    assert "não é cordal" in result.stderr


def test_missing_input_file_exits_two(cli_runner):
    result = cli_runner.invoke(cli, ["classify", "/nao/existe.g6"])
    assert result.exit_code == EXIT_USAGE


def test_invalid_seed_list(cli_runner):
    result = cli_runner.invoke(cli, ["--seeds", "a-b", "classify"], input="C~\n")
    assert result.exit_code == EXIT_USAGE


def test_run_returns_exit_codes(tmp_path, capsys):
    good = tmp_path / "k4.g6"
    good.write_text("C~\n")
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    assert run(["patterns", str(good)]) == EXIT_OK
    assert capsys.readouterr().out == "C~: -\n"
    assert run(["patterns", str(bad)]) == EXIT_USAGE
    assert "byte 2" in capsys.readouterr().err
    assert run(["verify", "--max-n", "3", "--mutant", "nao-existe"]) == EXIT_USAGE
