# -*- coding: utf-8 -*-

"""
powerslab setup script.
"""

import os

from setuptools import setup


## Function we need

def get_version_and_doc(filename):
    NS = dict(__version__='', __doc__='')
    docStatus = 0  # Not started, in progress, done
    for line in open(filename, 'rb').read().decode().splitlines():
        if line.startswith('__version__'):
            exec(line.strip(), NS, NS)
        elif line.startswith('"""'):
            if docStatus == 0:
                docStatus = 1
                line = line.lstrip('"')
            elif docStatus == 1:
                docStatus = 2
        if docStatus == 1:
            NS['__doc__'] += line.rstrip() + '\n'
    if not NS['__version__']:
        raise RuntimeError('Could not find __version__')
    return NS['__version__'], NS['__doc__']


def package_tree(pkgroot):
    subdirs = [os.path.relpath(i[0], THIS_DIR).replace(os.path.sep, '.')
               for i in os.walk(os.path.join(THIS_DIR, pkgroot))
               if '__init__.py' in i[2]]
    return subdirs


## Collect info for setup()

THIS_DIR = os.path.dirname(os.path.abspath(__file__))

name = 'powerslab'
description = ("Constants, criteria and density bounds for primes plus "
               "powers of two.")

version, doc = get_version_and_doc(os.path.join(THIS_DIR, name, '__init__.py'))


## Setup

setup(
    name=name,
    version=version,
    author='powerslab contributors',
    license='(new) BSD',
    keywords="number theory, Goldbach, Linnik, Romanov, primes, powers of two",
    description=description,
    long_description=doc,
    platforms='any',
    provides=[name],
    python_requires='>=3.8',
    install_requires=['numpy>=1.20', 'gmpy2>=2.1', 'joblib>=1.0'],
    extras_require={'dev': ['pytest', 'pytest-cov', 'flake8', 'invoke']},
    packages=package_tree(name),
    package_dir={name: name},
    entry_points={'console_scripts': ['powerslab = powerslab.__main__:main'], },
    zip_safe=False,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
