from difflib import Differ
from pathlib import Path
import shlex
import subprocess


# Each case needs a .out (exact stdout) or a .expect (lines that must appear
# in stdout). An optional .code holds the expected exit status.
cases = sorted(p.with_suffix('') for p in Path('cases').glob('*.args'))
for case in cases:
    args = case.with_suffix('.args')
    out = case.with_suffix('.out')
    expect = case.with_suffix('.expect')
    code = case.with_suffix('.code')
    command = ['python3', 'normq.py'] + shlex.split(args.read_text())

    print('Testing {} ...'.format(args))
    if not out.exists() and not expect.exists():
        print('Test failed: no {} or {}'.format(out, expect))
        exit(1)
    result = subprocess.run(command, stdout=subprocess.PIPE)
    status = int(code.read_text()) if code.exists() else 0
    if result.returncode != status:
        print('Test failed: exit status was {}, expected {}'.format(result.returncode, status))
        exit(1)
    output = result.stdout.decode('utf-8').strip()

    if out.exists():
        expected = out.read_text().strip()
        if output != expected:
            print('Test failed: output was different than expected\n')
            diff = list(Differ().compare(expected.splitlines(), output.splitlines()))
            print('\n'.join(diff))
            exit(1)
    if expect.exists():
        lines = {line.strip() for line in output.splitlines()}
        missing = [line.strip() for line in expect.read_text().splitlines()
                   if line.strip() and line.strip() not in lines]
        if missing:
            print('Test failed: missing lines\n')
            print('\n'.join(missing))
            exit(1)

exit(0)
