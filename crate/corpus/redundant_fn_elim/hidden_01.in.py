def pick_larger(a, b):
    if a >= b:
        return a
    return b

def greet(name):
    return 'hi ' + name

def cleanup():
    pass

def session(name):
    text = greet(name)
    cleanup()
    return text
# probe: session('bo')
