# Imports
from setuptools import setup, find_packages

# Installation setup
setup(
    name='gossipsim',
    version='0.1.0',
    description="A simulator of gossiping protocols in the random phone call model.",
    long_description="A deterministic, seedable simulator of randomized gossiping protocols (push-pull, "
                     "fast-gossiping with random walks, memory-model gossiping, leader election) on random graphs, "
                     "with failure injection and message-complexity measurements, based on pyTorch.",
    license='GPLv3',
    packages=find_packages(exclude=['test']),
    python_requires='>=3.11',
    install_requires=[
      'torch>=1.13',
      'numpy',
      'pandas',
      'tqdm'
    ],
    extras_require={
      'test': ['scipy']
    },
    entry_points={
      'console_scripts': ['gossipsim=gossipsim.cli.main:main']
    },
    zip_safe=False
)
