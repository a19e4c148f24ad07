package zoo.core;

// Cats mostly ignore the shelter staff.
public class Cat extends Animal implements Feedable {
    private int livesLeft;
    private int meals;

    public Cat(String name, int age) {
        super(name, age);
        this.livesLeft = 9;
    }

    @Override
    public String sound() {
        StringBuilder purr = new StringBuilder();
        for (int i = 0; i < livesLeft; i++) {
            purr.append("r");
        }
        return "pur" + purr;
    }

    @Override
    public void feed(int grams) {
        meals = meals + 1;
    }

    @Override
    public boolean isHungry() {
        return meals < 3;
    }
}
