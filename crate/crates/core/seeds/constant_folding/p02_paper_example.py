x = 10 + 15
y = x * 2
print(x, y)
