from setuptools import setup, find_packages

setup(
    name="chordmood",
    version="0.1.0",
    description="Chord proportions, major/minor classification and emotional power",
    long_description=open("README.md", encoding="utf-8").read(),
    long_description_content_type="text/markdown",
    author="chordmood developers",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "python-dotenv",
        "pydantic",
        "tqdm",
        "numpy",
        "scipy",
    ],
    entry_points={"console_scripts": ["chordmood=chordmood.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
)
