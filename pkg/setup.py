from setuptools import setup
from codecs import open
import os
import re

here = os.path.dirname(os.path.realpath(__file__))


def get_property(prop):
    result = re.search(
        r'{}\s*=\s*[\'"]([^\'"]*)[\'"]'.format(prop),
        open(os.path.join('rankint', '__init__.py')).read()
    )
    return result.group(1)


# Get the long description from the README file
with open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='rankint',

    # Versions should comply with PEP440.
    version=get_property('__version__'),

    description='rankint: exact weighted matroid intersection under rank oracles',
    long_description=long_description,

    # Author details
    author='The rankint developers',

    # Choose your license
    license='BSD',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: BSD License',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
    ],

    # What does your project relate to?
    keywords='matroid intersection rank oracle combinatorial optimization',

    packages = ['rankint', 'rankint.utils', 'rankint.matroid', 'rankint.scripts'],
    package_dir = {'rankint':'rankint'},

    python_requires='>=3.8',

    # List run-time dependencies here.  These will be installed by pip when
    # your project is installed.
    install_requires=['numpy', 'scipy', 'h5py', 'sortedcontainers'],

    # $ pip install -e .[test]
    extras_require={
        'test': ['pytest'],
    },

    # To provide executable scripts, use entry points in preference to the
    # "scripts" keyword.
    entry_points={
        'console_scripts': [
            'rankint=rankint.scripts.rankint_script:main',
        ],
    },
)
