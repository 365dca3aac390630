log = []
def f(i):
    log.append(i)
f(0)
f(1)
print(log)
