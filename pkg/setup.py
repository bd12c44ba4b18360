# flake8: noqa

from os import path as op
import io
from setuptools import setup, find_namespace_packages

here = op.abspath(op.dirname(__file__))
__version__ = '0.3'

# get the dependencies and installs
with io.open(op.join(here, 'requirements.txt'), encoding='utf-8') as f:
    all_reqs = f.read().split('\n')

install_requires = [x.strip() for x in all_reqs if x.strip()]

# The dosfdr_core and dosfdr_pipeline sub-packages live in this repository
# rather than on PyPI, so package them directly and pull in their external
# requirements.
subpackage_dirs = ['dosfdr_pipeline', 'dosfdr_core']
local_names = set(subpackage_dirs)
install_requires = [
    r for r in install_requires if r.split('=')[0] not in local_names
]
packages = []
package_dir = {}
package_data = {}
for sub in subpackage_dirs:
    with io.open(op.join(here, sub, 'requirements.txt'), encoding='utf-8') as f:
        for r in f.read().split('\n'):
            r = r.strip()
            if (r and r.split('=')[0] not in local_names
                    and r not in install_requires):
                install_requires.append(r)
    for pkg in find_namespace_packages(
            where=op.join(here, sub), include=['dosfdr.*']):
        packages.append(pkg)
        package_dir[pkg] = op.join(sub, *pkg.split('.'))
package_data['dosfdr.core'] = ['examples/*.json']

setup(
    name='dosfdr',
    version=__version__,
    description='Change-point estimation of the proportion of false null '
    'hypotheses and adaptive false discovery rate control',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    license='Apache License 2.0',
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
    ],
    keywords='statistics multiple-testing false-discovery-rate change-point',
    packages=packages,
    package_dir=package_dir,
    package_data=package_data,
    include_package_data=True,
    install_requires=install_requires,
    entry_points='''
        [console_scripts]
        dosfdr=dosfdr.pipeline.cli:main
    ''')
