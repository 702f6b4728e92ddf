# pyre-ignore-all-errors
from setuptools import setup, find_namespace_packages

setup(name='normq', packages=find_namespace_packages(include=['engine', 'engine.*']),
      install_requires=['lark-parser==0.7.1', 'numpy', 'galois'])
