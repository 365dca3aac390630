def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def hidden_files(names):
    hidden = []
    for name in names:
        if name.startswith('.'):
            hidden.append(name)
    return hidden
# probe: hidden_files(['.env', 'main.py', '.git'])
