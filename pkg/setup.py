from trustlam import __version__
from setuptools import setup
from pathlib import Path

version = __version__

HERE = Path(__file__).parent

README = (HERE / "README.md").read_text()

install_requires = (HERE / 'requirements.txt').read_text().splitlines()

python_requires = '>=3.9' # math.lcm with several arguments

packages = [
    'trustlam',
    'trustlam.cli',
    'trustlam.syntax',
    'trustlam.typecheck',
    'trustlam.machine',
    'trustlam.analysis',
    'trustlam.programs',
]
package_data = {'trustlam': ['defaults.yaml', 'programs/*.tl']}

extras_require = {'test': ['pytest', 'hypothesis']}

setup(name='trustlam',
      version=version,
      description='trustlam: CLI toolkit and python library for a typed probabilistic '
                  'lambda calculus with runtime trust checks and exact confidence analysis.',
      long_description=README,
      long_description_content_type='text/markdown',
      license='MIT',
      packages=packages,
      python_requires=python_requires,
      install_requires=install_requires,
      extras_require=extras_require,
      package_data=package_data,
      entry_points={'console_scripts': ['trustlam=trustlam.cli:main']},
      classifiers=[
          'Development Status :: 3 - Alpha',
          'License :: OSI Approved :: MIT License',
          'Operating System :: OS Independent',
          'Programming Language :: Python :: 3',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics'],
      )
