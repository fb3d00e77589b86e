"""Generate command: extremal k-cacti from the recipe catalog."""

import json
import sys
from typing import Any, Dict, List

import click
from rich.console import Console
from rich.table import Table

from core.construct import extremal_recipes, realize_recipe, realize_recipe_all
from core.graph import GraphError, canonical_form, write_graph6
from src.commands.common import EXIT_USAGE, FORMATS


def generate_extremal(n: int, k: int, all_graphs: bool = False) -> List[Dict[str, Any]]:
    """Extremal graphs with the recipe each came from.

    Without `all_graphs` only the first recipe is realized, with every part
    attached at one shared vertex. Otherwise every recipe is realized in
    every way, one graph per isomorphism class.
    """
    recipes = extremal_recipes(n, k)
    if not all_graphs:
        recipe = recipes[0]
        graph = realize_recipe(recipe)
        return [{'graph6': write_graph6(graph), 'edges': graph.size, 'recipe': recipe.to_dict()}]

    seen = set()
    results = []
    for recipe in recipes:
        for graph in realize_recipe_all(recipe):
            label = canonical_form(graph)
            if label in seen:
                continue
            seen.add(label)
            results.append({'graph6': write_graph6(graph), 'edges': graph.size, 'recipe': recipe.to_dict()})
    return results


def display_generated(results: List[Dict[str, Any]], n: int, k: int) -> None:
    console = Console()
    table = Table(title=f"Extremal {k}-cacti on {n} vertices")
    table.add_column("graph6", style="cyan", no_wrap=True)
    table.add_column("edges", justify="right")
    table.add_column("rule")
    table.add_column("parts")
    table.add_column("origin")
    for result in results:
        recipe = result['recipe']
        parts = ", ".join(f"{name} x{count}" for name, count in recipe['parts'].items())
        table.add_row(result['graph6'], str(result['edges']), recipe['rule'], parts, recipe['origin'])
    console.print(table)


@click.command(name='generate')
@click.option('--n', type=click.IntRange(min=1), required=True, help='Number of vertices')
@click.option('--k', type=click.IntRange(1, 4), required=True, help='Cactus class (1-4)')
@click.option('--all', 'all_graphs', is_flag=True,
              help='Every extremal graph up to isomorphism (n <= 10)')
@click.option('--format', 'output_format', type=click.Choice(FORMATS), default='graph6',
              help='Output format')
def generate_command(n: int, k: int, all_graphs: bool, output_format: str) -> None:
    """Print extremal k-cacti built from the recipe catalog.

    Examples:
        python main.py generate --n 7 --k 4
        python main.py generate --n 8 --k 2 --all --format table
    """
    try:
        results = generate_extremal(n, k, all_graphs)
    except GraphError as e:
        click.echo(f"ERROR: {e}", err=True)
        sys.exit(EXIT_USAGE)

    if output_format == 'graph6':
        for result in results:
            click.echo(result['graph6'])
    elif output_format == 'json':
        for result in results:
            click.echo(json.dumps(result))
    else:
        display_generated(results, n, k)
