"""
Invoke tasks for powerslab. Every public module in this directory is
imported, and the tasks and collections it defines are registered, so a
task is added by adding a file.
"""

import os

from invoke import Collection, Task

THIS_DIR = os.path.dirname(os.path.abspath(__file__))
ROOT_DIR = os.path.dirname(THIS_DIR)

ns = Collection()

for fname in sorted(os.listdir(THIS_DIR)):
    if fname.startswith('_') or not fname.endswith('.py'):
        continue
    m = __import__(fname[:-3], level=1, fromlist=[], globals=globals())
    collections = {name: ob for name, ob in vars(m).items()
                   if isinstance(ob, Collection)}
    for name, ob in collections.items():
        ns.add_collection(ob, name)
    for name, ob in vars(m).items():
        if not isinstance(ob, Task):
            continue
        # Tasks that live in a collection are registered through it
        if any(ob in c.tasks.values() for c in collections.values()):
            continue
        ns.add_task(ob, name)
