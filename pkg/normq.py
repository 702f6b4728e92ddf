from argparse import ArgumentParser, FileType
from sys import stderr, exit


parser = ArgumentParser(description='Enumerate, build and check normal surfaces in triangulated 3-manifolds')
parser.add_argument('--debug', action='store_true', help='print debug messages')
parser.add_argument('--version', action='store_true', help='print version info')
commands = parser.add_subparsers(dest='command', metavar='command')

table = ArgumentParser(add_help=False)
table.add_argument('triangulation', type=FileType('r'), help='gluing table file')

render = ArgumentParser(add_help=False)
render.add_argument('--human', action='store_true', help='output aligned text instead of JSON')

search = ArgumentParser(add_help=False)
search.add_argument('--max-coord', type=int, default=1, help='largest normal coordinate to try (default 1)')
search.add_argument('--fundamental', action='store_true', help='keep only fundamental solutions')
search.add_argument('--include-zero', action='store_true', help='keep the zero solution')
search.add_argument('--admissible-summands', action='store_true',
        help='test fundamentality against admissible summands only')
search.add_argument('--work-budget', type=int, default=50000000, help='largest search tree to attempt, in leaves')
search.add_argument('--jobs', type=int, default=1, help='worker processes (default 1)')

vector = ArgumentParser(add_help=False)
source = vector.add_mutually_exclusive_group(required=True)
source.add_argument('--vector', help='normal coordinates, 7 per tetrahedron')
source.add_argument('--vector-file', type=FileType('r'), help='file holding normal coordinates')

commands.add_parser('validate', parents=[table], help='check a gluing table')
commands.add_parser('skeleton', parents=[table, render], help='print vertex, edge and face classes')
commands.add_parser('equations', parents=[table, render], help='print the matching equations')
enum = commands.add_parser('enumerate', parents=[table, search], help='list admissible solutions')
enum.add_argument('--count-only', action='store_true', help='print only the number of solutions')
commands.add_parser('build', parents=[table, vector, render], help='print the cells of a surface')
commands.add_parser('analyze', parents=[table, vector, render], help='print invariants and checks of a surface')
commands.add_parser('verify', parents=[table, search, render], help='check every enumerated surface')
link = commands.add_parser('vertex-link', parents=[table], help='print vertex-linking coordinates')
link.add_argument('--vertex', type=int, help='vertex class (all if unset)')
args = parser.parse_args()

from engine.version import VERSION
if args.version:
    print(VERSION)
    exit(0)
if args.command is None:
    parser.error('a command is required')

from engine.log import setup_logger
setup_logger(debug=args.debug)

try:
    text = args.triangulation.read()
    name = args.triangulation.name
    given = None
    if getattr(args, 'vector_file', None) is not None:
        given = args.vector_file.read()
    elif getattr(args, 'vector', None) is not None:
        given = args.vector
except IOError as e:
    stderr.write('Input error: {}\n'.format(str(e)))
    exit(1)

from engine.errors import NormqError
from engine.normal.enumerate import EnumerationConfig
from engine import run
failed = False
try:
    if args.command in ('enumerate', 'verify'):
        config = EnumerationConfig(
            max_coordinate=args.max_coord,
            fundamental_only=args.fundamental,
            include_zero=args.include_zero,
            admissible_summands=args.admissible_summands,
            work_budget=args.work_budget,
            jobs=args.jobs
        )
    if args.command == 'validate':
        output = run.run_validate(text, name)
    elif args.command == 'skeleton':
        output = run.run_skeleton(text, name, args.human)
    elif args.command == 'equations':
        output = run.run_equations(text, name, args.human)
    elif args.command == 'enumerate':
        output = run.run_enumerate(text, name, config, args.count_only)
    elif args.command == 'build':
        output = run.run_build(text, name, given, args.human)
    elif args.command == 'analyze':
        output = run.run_analyze(text, name, given, args.human)
    elif args.command == 'verify':
        output, failed = run.run_verify(text, name, config, args.human)
    else:
        output = run.run_vertex_link(text, name, args.vertex)
except NormqError as e:
    stderr.write('{}\n'.format(str(e)))
    exit(1)

print(output)
if failed:
    stderr.write('Verification failed: a hard check was violated\n')
    exit(1)
exit(0)
