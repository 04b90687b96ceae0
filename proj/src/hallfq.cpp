// placeholder while the symbolic layer is brought up
