from cubedraw.cli import main

main()
