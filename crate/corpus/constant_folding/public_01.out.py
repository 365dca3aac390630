x = 25
y = x * 2
print(x, y)
