from curvaplane.main import main

main()
