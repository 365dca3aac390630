def before():
    pass

def after():
    pass

def wrapped(x):
    before()
    y = x + 1
    after()
    return y
# probe: wrapped(2)
