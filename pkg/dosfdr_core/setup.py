# flake8: noqa

from os import path as op
import io
from setuptools import (setup, find_namespace_packages)

here = op.abspath(op.dirname(__file__))
with io.open(op.join(here, 'requirements.txt'), encoding='utf-8') as f:
    all_reqs = f.read().split('\n')
install_requires = [x.strip() for x in all_reqs if x.strip()]

name = 'dosfdr_core'
version = '0.3'
description = ('DOS change-point estimation of the false null proportion, '
               'adaptive BH, asymptotic limits and simulation harness')

setup(
    name=name,
    version=version,
    description=description,
    license='Apache License 2.0',
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
    ],
    keywords='statistics multiple-testing false-discovery-rate change-point',
    packages=find_namespace_packages(exclude=['integration_tests*', 'tests*']),
    package_data={'dosfdr.core': ['examples/*.json']},
    install_requires=install_requires,
    zip_safe=False,
)
