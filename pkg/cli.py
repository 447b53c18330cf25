import json
import logging
import sys
from typing import List, Optional, Sequence

import click

from config import parse_seed_list, settings
from services.enumeration import CorpusFilter
from services.errors import GraphClassError
from services.graph_core import Graph, format_edge_list, to_graph6
from services.graph_service import GraphClassService
from services.mutants import MUTANTS
from services.verification_harness import report
from utils.helpers import format_vertex_set, get_setting_or_param, load_graphs

logger = logging.getLogger("cli")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

FILTER_CHOICES = [f.value for f in CorpusFilter]


class CommandError(click.ClickException):
    exit_code = EXIT_USAGE


class GraphClassGroup(click.Group):
    """Converte erros de entrada e de domínio em falha de uso (código 2)."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except GraphClassError as e:
            logger.debug("Command failed | error=%s", e)
            raise CommandError(str(e)) from e


def _seeds_callback(ctx, param, value):
    if value is None:
        return None
    try:
        seeds = parse_seed_list(value)
    except ValueError:
        raise click.BadParameter(f"lista de sementes inválida: {value}")
    if not seeds:
        raise click.BadParameter("lista de sementes vazia")
    return seeds


def _service(ctx: click.Context, mutant: Optional[str] = None) -> GraphClassService:
    seeds = get_setting_or_param(ctx.obj["seeds"], settings.seeds, "seeds")
    return GraphClassService(seeds=seeds, workers=ctx.obj["workers"], mutant=mutant)


def _read_input(source) -> List[Graph]:
    fmt = click.get_current_context().obj["format"]
    return load_graphs(source.read(), fmt)


def _output(ctx: click.Context, default: str = "text", allowed: Sequence[str] = ("text", "json")) -> str:
    output = ctx.obj["output"] or default
    if output not in allowed:
        raise click.UsageError(f"--output {output} não se aplica a este comando (use {', '.join(allowed)})")
    return output


@click.group(cls=GraphClassGroup)
@click.option("--format", "fmt", type=click.Choice(["auto", "graph6", "edgelist"]), default="auto",
              help="Formato de entrada dos grafos.")
@click.option("--output", type=click.Choice(["text", "json", "dot", "edgelist"]), default=None,
              help="Formato de saída (padrão: dot para cliquetree, text para os demais; edgelist só em enumerate).")
@click.option("--seeds", callback=_seeds_callback, default=None,
              help="Sementes de desempate, ex.: 0-19 ou 0,3,7 (usa padrão do .env se não informado).")
@click.option("--workers", type=click.IntRange(min=1), default=None,
              help="Processos paralelos na verificação.")
@click.pass_context
def cli(ctx, fmt, output, seeds, workers):
    """Classes de grafos cordais definidas por relações entre separadores minimais."""
    ctx.ensure_object(dict)
    ctx.obj.update(
        format=fmt,
        output=output,
        seeds=seeds,
        workers=workers or settings.workers,
    )


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.pass_context
def classify(ctx, source):
    """Pertinência às seis classes de separadores e à classe Helly."""
    output = _output(ctx)
    service = _service(ctx)
    for g in _read_input(source):
        result = service.classify(g)
        if output == "json":
            click.echo(result.model_dump_json())
            continue
        click.echo(f"{result.graph6}:")
        for class_id, verdict in result.classes.items():
            if verdict.member:
                click.echo(f"  {class_id}: sim")
            else:
                witness = verdict.witness
                click.echo(f"  {class_id}: não ({witness.pattern} em {format_vertex_set(witness.vertices, g.names)})")


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.pass_context
def separators(ctx, source):
    """Multiconjunto de separadores minimais e matriz de relações."""
    output = _output(ctx)
    service = _service(ctx)
    for g in _read_input(source):
        result = service.separators(g)
        if output == "json":
            click.echo(result.model_dump_json())
            continue
        click.echo(f"{result.graph6}: {len(result.separators)} separadores")
        for i, s in enumerate(result.separators):
            click.echo(f"  S{i} = {format_vertex_set(s, g.names)}")
        for i, row in enumerate(result.relations):
            cells = ["-" if r is None else r[0].upper() for r in row]
            click.echo(f"  S{i}: {' '.join(cells)}")


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.option("--seed", type=int, default=0, help="Semente de desempate da árvore.")
@click.pass_context
def cliquetree(ctx, source, seed):
    """Árvore de cliques (DOT por padrão)."""
    output = _output(ctx, default="dot", allowed=("dot", "json"))
    service = _service(ctx)
    for g in _read_input(source):
        result = service.clique_tree(g, seed)
        if output == "json":
            click.echo(result.model_dump_json())
        else:
            click.echo(result.dot, nl=False)


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.pass_context
def helly(ctx, source):
    """Propriedade de Helly da família de separadores."""
    output = _output(ctx)
    service = _service(ctx)
    for g in _read_input(source):
        result = service.helly(g)
        if output == "json":
            click.echo(result.model_dump_json())
            continue
        if result.holds:
            line = "Helly"
        else:
            sets = ", ".join(format_vertex_set(s, g.names) for s in result.witness_sets)
            line = f"não Helly (testemunha {sets})"
        if result.counterexample_vertices is not None:
            line += f"; subgrafo mínimo sem Helly em {format_vertex_set(result.counterexample_vertices, g.names)}"
        click.echo(line)


@cli.command()
@click.argument("source", type=click.File("r"), default="-")
@click.pass_context
def patterns(ctx, source):
    """Padrões proibidos presentes como subgrafo induzido."""
    output = _output(ctx)
    service = _service(ctx)
    for g in _read_input(source):
        result = service.patterns(g)
        if output == "json":
            click.echo(result.model_dump_json())
        else:
            click.echo(f"{result.graph6}: {' '.join(result.patterns) or '-'}")


@cli.command()
@click.argument("source", type=click.File("r"), required=False)
@click.option("--max-n", type=click.IntRange(1, 8), default=None, help="Maior número de vértices do corpus interno.")
@click.option("--filter", "flt", type=click.Choice(FILTER_CHOICES), default=None, help="Filtro do corpus.")
@click.option("--mutant", type=click.Choice(sorted(MUTANTS)), default=None, help="Definições mutantes a verificar.")
@click.pass_context
def verify(ctx, source, max_n, flt, mutant):
    """Executa as suítes de verificação; SOURCE é um corpus graph6 externo."""
    output = _output(ctx)
    service = _service(ctx, mutant)
    flt = get_setting_or_param(flt, settings.corpus_filter, "filter")
    if source is not None:
        graphs = load_graphs(source.read(), "graph6")
        result = service.verify(flt=flt, graphs=graphs, source=source.name)
    else:
        result = service.verify(max_n=get_setting_or_param(max_n, settings.max_n, "max_n"), flt=flt)
    text, document = report(result)
    click.echo(document if output == "json" else text, nl=False)
    if not result.passed:
        ctx.exit(EXIT_VERIFICATION_FAILED)


@cli.command("enumerate")
@click.option("--max-n", type=click.IntRange(1, 8), default=None, help="Maior número de vértices.")
@click.option("--min-n", type=click.IntRange(min=1), default=1,
              help="Menor número de vértices (--min-n 3 --max-n 3 lista só os grafos com 3 vértices).")
@click.option("--filter", "flt", type=click.Choice(FILTER_CHOICES), default=None, help="Filtro da enumeração.")
@click.pass_context
def enumerate_command(ctx, max_n, min_n, flt):
    """Um representante por classe de isomorfismo com min_n <= n <= max_n (graph6 por padrão)."""
    output = _output(ctx, allowed=("text", "json", "edgelist"))
    service = _service(ctx)
    max_n = get_setting_or_param(max_n, settings.max_n, "max_n")
    flt = get_setting_or_param(flt, settings.corpus_filter, "filter")
    graphs = service.enumerate(max_n, flt, min_n)
    if output == "json":
        click.echo(json.dumps([to_graph6(g) for g in graphs]))
    elif output == "edgelist":
        for g in graphs:
            click.echo(f"# {to_graph6(g)}")
            click.echo(format_edge_list(g))
    else:
        for g in graphs:
            click.echo(to_graph6(g))


def run(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        stream=sys.stderr
    )
    try:
        code = cli.main(args=list(argv) if argv is not None else None, prog_name="graphclass", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Interrompido", err=True)
        return EXIT_USAGE
    except OSError as e:
        click.echo(f"Erro: {e}", err=True)
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
