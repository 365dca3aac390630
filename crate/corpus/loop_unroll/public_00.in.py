log = []
def f(i):
    log.append(i)
for i in range(2):
    f(i)
print(log)
