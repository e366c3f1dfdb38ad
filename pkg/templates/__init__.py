# templates package
